#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "mixvol/semi_interlaced.hpp"

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

// The running example: a doubled triangle with one daughter on each leg.
const PointSet kMotherW = pts(2, {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}});
const std::vector<std::vector<std::size_t>> kDaughtersW{{1, 2}, {3, 4}};

const PointSet kSquare = pts(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});

}  // namespace

TEST_CASE("daughter acceptance on the square") {
    Polytope hull(kSquare);
    auto faces = enumerate_faces(hull);

    // Right edge: removes the opposite edge only.
    DaughterReport right = check_daughter(hull, faces, {1, 3});
    CHECK(right.accepted);
    REQUIRE(right.removed.size() == 1);
    CHECK(right.removed[0].point_indices == std::vector<std::size_t>{0, 2});

    // A single corner: the two edges through the far corner meet.
    DaughterReport corner = check_daughter(hull, faces, {3});
    CHECK_FALSE(corner.accepted);
    REQUIRE(corner.violation.has_value());

    // The whole square removes nothing.
    DaughterReport all = check_daughter(hull, faces, {0, 1, 2, 3});
    CHECK(all.accepted);
    CHECK(all.removed.empty());

    CHECK_THROWS_AS(check_daughter(hull, faces, {}), InvalidInput);
}

TEST_CASE("interlaced examples on the unit square") {
    CHECK(is_interlaced({{1, 2}, {0, 3}}, kSquare));  // antidiagonal + diagonal
    CHECK(mixed_volume({kSquare.subset(std::vector<std::size_t>{1, 2}),
                        kSquare.subset(std::vector<std::size_t>{0, 3})}) == lattice_volume(kSquare));
    CHECK(is_interlaced({{0, 1, 2, 3}, {0, 1, 2, 3}}, kSquare));
    // An edge and the square: the opposite edge of the square meets only one.
    CHECK_FALSE(is_interlaced({{1, 3}, {0, 1, 2, 3}}, kSquare));
}

TEST_CASE("classification of the running example") {
    DaughterFamily fam(kMotherW, kDaughtersW);
    auto cls = classify_faces(fam);
    CHECK(cls.semi);
    REQUIRE(cls.sutures.size() == 4);
    CHECK(cls.sutures[0].point_indices == std::vector<std::size_t>{0});        // origin vertex
    CHECK(cls.sutures[1].point_indices == std::vector<std::size_t>{0, 1, 2});  // bottom edge
    CHECK(cls.sutures[2].point_indices == std::vector<std::size_t>{0, 3, 4});  // left edge
    CHECK(cls.sutures[3].point_indices.size() == 5);                           // the polytope itself
    CHECK(cls.sutures[0].dim == 0);
    CHECK(cls.sutures[3].dim == 2);
}

TEST_CASE("a doubled daughter breaks the semi-interlaced condition") {
    DaughterFamily fam(kMotherW, {{1, 2}, {1, 2}});
    auto cls = classify_faces(fam);
    CHECK_FALSE(cls.semi);
    REQUIRE(cls.violation.has_value());
    CHECK(cls.violation->point_indices == std::vector<std::size_t>{0, 3, 4});  // left edge sees no daughter
    CHECK_THROWS_AS(suture_system(fam), PropertyViolation);
}

TEST_CASE("lower-dimensional mothers are rejected") {
    PointSet flat = pts(2, {{0, 0}, {1, 0}, {2, 0}});
    DaughterFamily fam(flat, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(classify_faces(fam), InvalidInput);
}

TEST_CASE("combinatorial coefficient examples") {
    PointSet f = pts(1, {{0}, {2}, {3}});
    CHECK(c_coefficient(f, pts(1, {{0}})) == 2);
    CHECK(c_coefficient(f, f) == 1);
    CHECK(c_coefficient(f, pts(1, {{2}})) == 0);  // interior point, not a face
    CHECK(c_coefficient(kMotherW, pts(2, {{0, 0}})) == 1);  // 4 - trapezoid volume 3
    CHECK(c_coefficient(kMotherW, pts(2, {{0, 0}, {1, 0}, {2, 0}})) == 1);
    CHECK(c_coefficient(kMotherW, pts(2, {{5, 5}})) == 0);
}

TEST_CASE("suture system of the running example") {
    DaughterFamily fam(kMotherW, kDaughtersW);
    SutureTable t = suture_system(fam, true);
    REQUIRE(t.sutures.size() == 4);
    CHECK(t.v == IntVec{Int(1), Int(2), Int(2), Int(4)});
    CHECK(t.vdag == IntVec{Int(1), Int(1), Int(1), Int(1)});
    CHECK(t.mixed_volume_of_family() == 1);
    REQUIRE(t.vdag_direct.has_value());
    CHECK(*t.vdag_direct == t.vdag);

    // Coefficients below the diagonal, diagonal ones, and zero elsewhere.
    CHECK(t.c.at(0, 0) == 1);
    CHECK(t.c.at(1, 0) == 1);
    CHECK(t.c.at(2, 0) == 1);
    CHECK(t.c.at(3, 0) == 1);
    CHECK(t.c.at(3, 1) == 1);
    CHECK(t.c.at(3, 2) == 1);
    CHECK(t.c.at(2, 1) == 0);
    CHECK(t.c.at(0, 1) == 0);

    Int oracle = mixed_volume({fam.daughter_points(0), fam.daughter_points(1)});
    CHECK(oracle == 1);
}

TEST_CASE("interlaced families have a single suture and recover the volume") {
    // Antidiagonal and diagonal of the square: every proper face meets
    // strictly more daughters than its dimension, so only P survives.
    DaughterFamily fam(kSquare, {{1, 2}, {0, 3}});
    SutureTable t = suture_system(fam, true);
    REQUIRE(t.sutures.size() == 1);
    CHECK(t.c == IntMatrix::identity(1));
    CHECK(t.vdag[0] == lattice_volume(kSquare));
}

TEST_CASE("sign pattern for the unimodular simplex family") {
    // Off-coordinate daughters of the unit simplex: every face through the
    // origin is a suture and all coefficients are 1, so the inverse matrix
    // alternates signs by codimension.
    for (std::size_t n : {2u, 3u}) {
        std::vector<IntVec> raw{IntVec(n, Int(0))};
        for (std::size_t i = 0; i < n; ++i) {
            IntVec e(n, Int(0));
            e[i] = 1;
            raw.push_back(e);
        }
        PointSet simplex(n, raw);
        std::vector<std::vector<std::size_t>> daughters;
        for (std::size_t i = 0; i < n; ++i) daughters.push_back({i + 1});
        DaughterFamily fam(simplex, daughters);
        SutureTable t = suture_system(fam, true);
        CHECK(t.sutures.size() == (std::size_t(1) << n));
        for (std::size_t i = 0; i < t.sutures.size(); ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                const auto &sub = t.sutures[j].point_indices, &sup = t.sutures[i].point_indices;
                if (!std::includes(sup.begin(), sup.end(), sub.begin(), sub.end())) continue;
                CHECK(t.c.at(i, j) == 1);
                Int expected = (t.sutures[i].dim - t.sutures[j].dim) % 2 == 0 ? 1 : -1;
                CHECK(t.dmat.at(i, j) == expected);
            }
    }
}

TEST_CASE("interlaced but rejected by the daughter conditions") {
    // Two copies of a tetrahedron plus an apex-to-base-edge segment.
    PointSet mother = pts(3, {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}});
    std::vector<std::size_t> whole{0, 1, 2, 3, 4};
    std::vector<std::size_t> segment{3, 4};
    CHECK(is_interlaced({whole, whole, segment}, mother));
    Polytope hull(mother);
    auto faces = enumerate_faces(hull);
    DaughterReport rep = check_daughter(hull, faces, segment);
    CHECK_FALSE(rep.accepted);
    CHECK_THROWS_AS(DaughterFamily(mother, {whole, whole, segment}), InvalidInput);
}

namespace {

// For sutures meeting with the expected affine intersection, both derived
// faces (the intersection and the section of P by the joint affine span)
// must again be sutures.
int check_suture_intersections(const PointSet &mother, const SutureTable &t) {
    std::set<std::vector<std::size_t>> suture_keys;
    for (const auto &s : t.sutures) suture_keys.insert(s.point_indices);
    int considered = 0;
    for (const auto &s1 : t.sutures)
        for (const auto &s2 : t.sutures) {
            std::vector<std::size_t> inter;
            std::set_intersection(s1.point_indices.begin(), s1.point_indices.end(), s2.point_indices.begin(),
                                  s2.point_indices.end(), std::back_inserter(inter));
            if (inter.empty()) continue;
            std::vector<IntVec> inter_pts, s1_pts, s2_pts, joint_pts;
            for (auto i : inter) inter_pts.push_back(mother.points[i]);
            for (auto i : s1.point_indices) s1_pts.push_back(mother.points[i]);
            for (auto i : s2.point_indices) s2_pts.push_back(mother.points[i]);
            joint_pts = s1_pts;
            joint_pts.insert(joint_pts.end(), s2_pts.begin(), s2_pts.end());
            // aff(S1 cap S2) = aff(S1) cap aff(S2), settled by a dimension count.
            AffineChart c1(s1_pts), c2(s2_pts);
            std::vector<IntVec> rows;
            for (auto &e : c1.span_equations()) rows.push_back(e.first);
            for (auto &e : c2.span_equations()) rows.push_back(e.first);
            std::size_t meet_dim = rows.empty() ? mother.dim : mother.dim - rank(IntMatrix::from_rows(rows));
            if (affine_rank(inter_pts) != meet_dim) continue;
            ++considered;
            CHECK(suture_keys.count(inter) == 1);

            // Points of the mother inside aff(S1 union S2).
            std::size_t joint_rank = affine_rank(joint_pts);
            std::vector<std::size_t> section;
            for (std::size_t p = 0; p < mother.size(); ++p) {
                auto probe = joint_pts;
                probe.push_back(mother.points[p]);
                if (affine_rank(probe) == joint_rank) section.push_back(p);
            }
            CHECK(suture_keys.count(section) == 1);
        }
    return considered;
}

}  // namespace

TEST_CASE("suture intersections are sutures") {
    DaughterFamily fam(kMotherW, kDaughtersW);
    CHECK(check_suture_intersections(kMotherW, suture_system(fam)) > 0);

    testgen::Rng rng(977);
    int done = 0, considered = 0;
    while (done < 15) {
        std::size_t n = 2 + rng.pick(0, 1);
        PointSet mother = rng.full_dim_set(n, n + 3, 0, 3);
        bool usable = true;
        std::vector<std::vector<std::size_t>> daughters;
        for (std::size_t i = 0; i < n && usable; ++i) {
            std::vector<std::size_t> d;
            bool zero = false;
            for (std::size_t p = 0; p < mother.size(); ++p) {
                if (mother.points[p][i] == 0)
                    zero = true;
                else
                    d.push_back(p);
            }
            usable = zero && !d.empty();
            daughters.push_back(std::move(d));
        }
        if (!usable) continue;
        ++done;
        DaughterFamily fam2(mother, daughters);
        considered += check_suture_intersections(mother, suture_system(fam2));
    }
    CHECK(considered > 0);
}

TEST_CASE("polytope intersection predicate") {
    CHECK(polytopes_intersect(pts(2, {{0, 0}, {2, 2}}), pts(2, {{2, 0}, {0, 2}})));
    CHECK_FALSE(polytopes_intersect(pts(2, {{0, 0}, {1, 0}}), pts(2, {{0, 1}, {1, 1}})));
    CHECK(polytopes_intersect(pts(2, {{1, 1}}), pts(2, {{0, 0}, {2, 0}, {0, 2}})));
    CHECK_FALSE(polytopes_intersect(pts(2, {{3, 3}}), pts(2, {{0, 0}, {2, 0}, {0, 2}})));
}

TEST_CASE("main lemma holds on the running example") {
    DaughterFamily fam(kMotherW, kDaughtersW);
    SutureTable t = suture_system(fam);
    for (const Face &s : t.sutures) {
        LemmaReport rep = verify_main_lemma(fam, s);
        CHECK(rep.all_hold);
        if (s.point_indices.size() == kMotherW.size()) {
            CHECK(rep.trivial);
        } else {
            CHECK_FALSE(rep.checks.empty());
        }
    }
    Face not_suture;
    not_suture.point_indices = {2, 4};  // the hypotenuse edge
    CHECK_THROWS_AS(verify_main_lemma(fam, not_suture), InvalidInput);
}

TEST_CASE("khovanskii recovers the recursion on the running example") {
    // Lifting each daughter at level 0 and the rest of the mother at level -1
    // splits Vol(P) = 4 into the mixed volume 1 plus one unit per proper suture.
    DaughterFamily fam(kMotherW, kDaughtersW);
    std::vector<Lift> lifts;
    for (std::size_t i = 0; i < 2; ++i) {
        auto members = fam.daughter_members(i);
        std::set<std::size_t> mem(members.begin(), members.end());
        RatVec h(kMotherW.size());
        for (std::size_t p = 0; p < kMotherW.size(); ++p) h[p] = mem.count(p) ? Rat(0) : Rat(-1);
        lifts.push_back(Lift(kMotherW, h));
    }
    MVReport r = khovanskii_mv(lifts);
    CHECK(r.value == 4);
    std::size_t ones = 0;
    for (const auto &term : r.per_xi) {
        CHECK((term.value == 0 || term.value == 1));
        ones += (term.value == 1);
    }
    CHECK(ones == 4);
}
