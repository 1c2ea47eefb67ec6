#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "mixvol/applications.hpp"

using namespace mixvol;

namespace {

PointSet pts(std::size_t dim, std::vector<std::vector<long>> v) {
    std::vector<IntVec> out;
    for (auto &p : v) {
        IntVec q;
        for (long x : p) q.push_back(Int(x));
        out.push_back(std::move(q));
    }
    return PointSet(dim, std::move(out));
}

IntVec ivec(std::vector<long> v) {
    IntVec out;
    for (long x : v) out.push_back(Int(x));
    return out;
}

const PointSet kMotherW = pts(2, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}});

// All lattice points of k * (standard triangle).
PointSet dilated_triangle_points(long k) {
    std::vector<IntVec> out;
    for (long x = 0; x <= k; ++x)
        for (long y = 0; x + y <= k; ++y) out.push_back(ivec({x, y}));
    return PointSet(2, std::move(out));
}

// The ten-point product set with vanishing off-coordinate mixed volume.
PointSet product_fixture() {
    std::vector<IntVec> base{ivec({0, 0, 0}), ivec({2, 0, 0}), ivec({0, 2, 0}), ivec({1, 1, 0}), ivec({0, 0, 1})};
    std::vector<IntVec> out;
    for (const auto &b : base)
        for (long t : {0L, 1L}) {
            IntVec q = b;
            q.push_back(Int(t));
            out.push_back(q);
        }
    return PointSet(4, std::move(out));
}

}  // namespace

TEST_CASE("off-coordinate family of the running example") {
    auto fam = off_coordinate_family(kMotherW, ConeSpec::orthant(2));
    CHECK(fam.family.daughter(0) == std::vector<std::size_t>{1, 2});
    CHECK(fam.family.daughter(1) == std::vector<std::size_t>{3, 4});
    CHECK(fam.facet_touched == std::vector<bool>{true, true});
    CHECK(voff(kMotherW, ConeSpec::orthant(2)).value == 1);
}

TEST_CASE("cone validation") {
    ConeSpec bad;
    bad.ambient_dim = 2;
    bad.functionals = {ivec({2, 0})};
    CHECK_THROWS_AS(bad.validate(), InvalidInput);
    bad.functionals = {ivec({1, 0}), ivec({1, 0})};
    CHECK_THROWS_AS(bad.validate(), InvalidInput);
    // A point outside the cone is rejected.
    CHECK_THROWS_AS(off_coordinate_family(pts(2, {{-1, 0}, {1, 1}}), ConeSpec::orthant(2)), InvalidInput);
    // Every point on a facet makes that daughter empty.
    CHECK_THROWS_AS(off_coordinate_family(pts(2, {{0, 0}, {0, 2}}), ConeSpec::orthant(2)), InvalidInput);
}

TEST_CASE("untouched facets yield the whole polytope as daughter") {
    PointSet shifted = pts(2, {{1, 1}, {2, 1}, {1, 2}});
    auto fam = off_coordinate_family(shifted, ConeSpec::orthant(2));
    CHECK(fam.facet_touched == std::vector<bool>{false, false});
    CHECK(fam.family.daughter(0).size() == 3);
    CHECK(fam.family.removed(0).empty());
}

TEST_CASE("sutures of an off-coordinate family are exactly the V-faces") {
    testgen::Rng rng(211);
    AffineCone orthant3 = AffineCone::from(ConeSpec::orthant(3));
    int done = 0;
    while (done < 12) {
        PointSet p = rng.full_dim_set(3, 7, 0, 3);
        bool touches = true, off_facet = true;
        for (std::size_t i = 0; i < 3 && touches; ++i) {
            bool zero = false, pos = false;
            for (const auto &q : p.points) (q[i] == 0 ? zero : pos) = true;
            touches = zero;
            off_facet = off_facet && pos;
        }
        if (!touches || !off_facet) continue;
        ++done;
        auto fam = off_coordinate_family(p, orthant3);
        auto cls = classify_faces(fam.family);
        REQUIRE(cls.semi);
        std::set<std::vector<std::size_t>> suture_keys;
        for (const auto &s : cls.sutures) suture_keys.insert(s.point_indices);
        for (const Face &f : fam.family.faces())
            CHECK(is_v_face(f, p, orthant3) == (suture_keys.count(f.point_indices) == 1));
    }
}

TEST_CASE("the product fixture has vanishing Voff but is not a stretched Cayley set") {
    PointSet p = product_fixture();
    VoffResult r = voff(p, ConeSpec::orthant(4));
    CHECK(r.value == 0);

    auto fam = off_coordinate_family(p, ConeSpec::orthant(4));
    std::vector<PointSet> ds;
    for (std::size_t i = 0; i < 4; ++i) ds.push_back(fam.family.daughter_points(i));
    auto witness = mv_zero_witness(ds);
    REQUIRE(witness.has_value());
    CHECK(*witness == std::vector<std::size_t>{0, 1, 2});

    CHECK_FALSE(detect_stretched_bk(p).has_value());
}

TEST_CASE("newton numbers of dilated triangles") {
    NewtonResult two = newton_number(dilated_triangle_points(2), true);
    CHECK(two.nu == 1);  // 4 - 2 - 2 + 1
    REQUIRE(two.voff_value.has_value());
    CHECK(*two.voff_value == 1);

    NewtonResult three = newton_number(dilated_triangle_points(3), true);
    CHECK(three.nu == 4);  // 9 - 3 - 3 + 1

    // A pyramid over a long segment is negligible.
    NewtonResult b1 = newton_number(pts(2, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}}), true);
    CHECK(b1.nu == 0);

    CHECK_THROWS_AS(newton_number(pts(2, {{1, 0}, {0, 1}, {1, 1}})), InvalidInput);  // origin missing
    CHECK_THROWS_AS(newton_number(pts(2, {{0, 0}, {3, 0}, {0, 3}, {-1, 0}})), InvalidInput);
}

TEST_CASE("stretched Cayley detection") {
    auto hit = detect_stretched_bk(pts(2, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}}));
    REQUIRE(hit.has_value());
    CHECK(hit->k == 1);
    CHECK(hit->coords == std::vector<std::size_t>{1});
    CHECK(hit->stretch == ivec({1}));
    CHECK(hit->blocks[0].size() == 4);
    CHECK(hit->blocks[1] == std::vector<IntVec>{ivec({0})});

    CHECK_FALSE(detect_stretched_bk(dilated_triangle_points(2)).has_value());

    // A doubled pyramid apex: stretch factor 2.
    auto stretched = detect_stretched_bk(pts(2, {{0, 0}, {1, 0}, {2, 0}, {0, 2}}));
    REQUIRE(stretched.has_value());
    CHECK(stretched->stretch == ivec({2}));

    CHECK_THROWS_AS(detect_stretched_bk(pts(1, {{-1}, {0}})), InvalidInput);
}

TEST_CASE("detected sets have vanishing off-coordinate mixed volume") {
    testgen::Rng rng(223);
    int found = 0;
    for (int trial = 0; trial < 200 && found < 8; ++trial) {
        std::size_t n = 2 + rng.pick(0, 1);
        PointSet p = rng.full_dim_set(n, n + 3, 0, 2);
        bool usable = true;
        for (std::size_t i = 0; i < n && usable; ++i) {
            bool zero = false, pos = false;
            for (const auto &q : p.points) (q[i] == 0 ? zero : pos) = true;
            usable = zero && pos;
        }
        if (!usable) continue;
        if (!detect_stretched_bk(p).has_value()) continue;
        ++found;
        CHECK(voff(p, ConeSpec::orthant(n)).value == 0);
    }
    CHECK(found > 0);
}

TEST_CASE("orbit multiplicities of monomial curves") {
    CHECK(orbit_multiplicity(pts(1, {{0}, {1}}), {0}).multiplicity == 1);
    auto cusp = orbit_multiplicity(pts(1, {{0}, {2}, {3}}), {0});
    CHECK(cusp.multiplicity == 2);
    CHECK_FALSE(cusp.smooth_along_orbit);
    CHECK(orbit_multiplicity(pts(1, {{0}, {2}}), {0}).multiplicity == 1);
    CHECK_THROWS_AS(orbit_multiplicity(pts(1, {{0}, {2}, {3}}), {1}), InvalidInput);
    CHECK_THROWS_AS(orbit_multiplicity(pts(2, {{0, 0}, {1, 0}}), {0}), InvalidInput);
}

TEST_CASE("toric report flags the smooth cases") {
    ToricReport sq = toric_orbit_report(pts(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    CHECK(sq.smooth);
    ToricReport cusp = toric_orbit_report(pts(1, {{0}, {2}, {3}}));
    CHECK_FALSE(cusp.smooth);
    for (const auto &o : cusp.orbits) CHECK(o.multiplicity >= 1);
}

TEST_CASE("cayley sums place blocks at unit levels") {
    PointSet c = cayley_sum({{ivec({5})}, {ivec({0}), ivec({1})}}, 1);
    CHECK(c.dim == 2);
    CHECK(c.contains(ivec({0, 5})));
    CHECK(c.contains(ivec({1, 0})));
    CHECK(c.contains(ivec({1, 1})));
}

TEST_CASE("level facets of a Cayley configuration cut out the blocks") {
    // {u} * P1 with the orthant on the level coordinate: the off-coordinate
    // polytope of that facet is exactly the level-one block.
    PointSet config = cayley_sum({{ivec({3, 5})}, {ivec({0, 0}), ivec({1, 0}), ivec({0, 1})}}, 2);
    ConeSpec level;
    level.ambient_dim = 3;
    level.functionals = {ivec({1, 0, 0})};
    auto fam = off_coordinate_family(config, level);
    CHECK(fam.family.daughter(0) == std::vector<std::size_t>{1, 2, 3});
    for (std::size_t i : fam.family.daughter(0)) CHECK(config.points[i][0] == 1);
    CHECK(fam.family.daughter(1).size() == config.size());
}

TEST_CASE("maximum likelihood degrees") {
    CayleyInput line{2, {pts(2, {{0, 0}, {1, 0}, {0, 1}})}};
    CHECK(ml_degree(line, ivec({3, 5}), VoffRoute::Check).value == 1);

    CayleyInput conic{2, {dilated_triangle_points(2)}};
    CHECK(ml_degree(conic, ivec({3, 5}), VoffRoute::Check).value == 4);

    CayleyInput vertical{2, {pts(2, {{0, 0}, {1, 0}})}};
    DegreeResult r = ml_degree(vertical, ivec({3, 5}));
    CHECK(r.value == 0);
    CHECK(r.degenerate);

    CHECK_THROWS_AS(ml_degree(CayleyInput{2, {}}, ivec({1, 1})), InvalidInput);
}

TEST_CASE("euclidean distance degrees") {
    CayleyInput line{2, {pts(2, {{0, 0}, {1, 0}, {0, 1}})}};
    CHECK(ed_degree(line, VoffRoute::Check).value == 1);

    CayleyInput conic{2, {dilated_triangle_points(2)}};
    CHECK(ed_degree(conic, VoffRoute::Check).value == 4);

    CayleyInput point_on_line{1, {pts(1, {{0}, {1}})}};
    CHECK(ed_degree(point_on_line, VoffRoute::Check).value == 1);

    CayleyInput no_origin{1, {pts(1, {{1}, {2}})}};
    CHECK_THROWS_AS(ed_degree(no_origin), InvalidInput);
}

TEST_CASE("polar degrees") {
    PointSet simplex3 = pts(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(polar_degree(simplex3, 1, VoffRoute::Check).value == 0);

    std::vector<IntVec> conic_support;
    for (long a = 0; a <= 2; ++a)
        for (long b = 0; a + b <= 2; ++b) conic_support.push_back(ivec({a, b, 2 - a - b}));
    CHECK(polar_degree(PointSet(3, conic_support), 2, VoffRoute::Check).value == 1);

    std::vector<IntVec> cubic_support;
    for (long a = 0; a <= 3; ++a)
        for (long b = 0; a + b <= 3; ++b) cubic_support.push_back(ivec({a, b, 3 - a - b}));
    CHECK(polar_degree(PointSet(3, cubic_support), 3, VoffRoute::Check).value == 4);

    CHECK_THROWS_AS(polar_degree(simplex3, 2), InvalidInput);  // wrong total degree
}

TEST_CASE("voff routes agree") {
    VoffResult formula = voff(kMotherW, ConeSpec::orthant(2), VoffRoute::Formula);
    VoffResult oracle = voff(kMotherW, ConeSpec::orthant(2), VoffRoute::Oracle);
    VoffResult both = voff(kMotherW, ConeSpec::orthant(2), VoffRoute::Check);
    CHECK(formula.value == oracle.value);
    REQUIRE(both.oracle_value.has_value());
    CHECK(*both.oracle_value == both.value);
    CHECK(formula.table.has_value());
    CHECK_FALSE(oracle.table.has_value());
}
