#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "mixvol/polytope.hpp"

#include <set>

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

const PointSet kSquare = pts(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});

}  // namespace

TEST_CASE("hull of the unit square") {
    Polytope p(kSquare);
    CHECK(p.dim() == 2);
    CHECK(p.vertices().size() == 4);
    CHECK(p.facets().size() == 4);
    CHECK(p.span_equations().empty());
}

TEST_CASE("hull drops a point on an edge") {
    Polytope p(pts(2, {{0, 0}, {2, 0}, {0, 2}, {1, 1}}));
    CHECK(p.vertices().size() == 3);
    CHECK(p.facets().size() == 3);
}

TEST_CASE("hull of a single point") {
    Polytope p(pts(2, {{5, -3}}));
    CHECK(p.dim() == 0);
    CHECK(p.vertices() == std::vector<std::size_t>{0});
    CHECK(p.facets().empty());
    CHECK(p.span_equations().size() == 2);
}

TEST_CASE("hull of a lower-dimensional set records span equations") {
    Polytope p(pts(3, {{0, 0, 1}, {2, 0, 1}, {0, 2, 1}}));
    CHECK(p.dim() == 2);
    CHECK(p.span_equations().size() == 1);
    CHECK(p.vertices().size() == 3);
    CHECK(p.facets().size() == 3);
    for (const auto &pt : p.source().points) CHECK(p.contains(pt));
    CHECK_FALSE(p.contains(IntVec{Int(0), Int(0), Int(0)}));
    CHECK_FALSE(p.contains(IntVec{Int(2), Int(2), Int(1)}));
}

TEST_CASE("support faces of the square") {
    Polytope p(kSquare);
    Face f = support_face(p, IntVec{Int(1), Int(0)});
    CHECK(f.point_indices == std::vector<std::size_t>{1, 3});
    CHECK(f.support_value == 1);
    CHECK(f.dim == 1);

    Face all = support_face(p, IntVec{Int(0), Int(0)});
    CHECK(all.point_indices.size() == 4);

    Face corner = support_face(p, IntVec{Int(1), Int(1)});
    CHECK(corner.point_indices == std::vector<std::size_t>{3});
    CHECK(corner.support_value == 2);
    CHECK(corner.dim == 0);
}

TEST_CASE("face counts: segment, square, triangle") {
    CHECK(enumerate_faces(Polytope(pts(1, {{0}, {2}}))).size() == 3);
    CHECK(enumerate_faces(Polytope(kSquare)).size() == 9);
    CHECK(enumerate_faces(Polytope(pts(2, {{0, 0}, {2, 0}, {0, 2}}))).size() == 7);
}

TEST_CASE("faces come with valid witnesses and are closed under intersection") {
    testgen::Rng rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 2 + rng.pick(0, 1);
        PointSet ps = rng.point_set(n, 4 + rng.pick(0, 4), -3, 3);
        Polytope p(ps);
        auto faces = enumerate_faces(p);
        std::set<std::vector<std::size_t>> keys;
        for (const auto &f : faces) {
            keys.insert(f.point_indices);
            Face w = support_face(p, f.witness);
            CHECK(w.point_indices == f.point_indices);
        }
        for (const auto &a : faces)
            for (const auto &b : faces) {
                std::vector<std::size_t> inter;
                std::set_intersection(a.point_indices.begin(), a.point_indices.end(), b.point_indices.begin(),
                                      b.point_indices.end(), std::back_inserter(inter));
                if (!inter.empty()) CHECK(keys.count(inter) == 1);
            }
    }
}

TEST_CASE("lattice volume examples") {
    CHECK(lattice_volume(pts(2, {{0, 0}, {1, 0}, {0, 1}})) == 1);
    CHECK(lattice_volume(kSquare) == 2);
    CHECK(lattice_volume(pts(2, {{0, 0}, {2, 0}, {0, 2}, {1, 1}})) == 4);
    CHECK(lattice_volume(pts(1, {{0}, {7}})) == 7);
    // Lower-dimensional set against a full ambient expectation reports 0.
    CHECK(lattice_volume(pts(2, {{0, 0}, {2, 0}}), 2) == 0);
    CHECK(lattice_volume(pts(2, {{0, 0}, {2, 0}})) == 2);
    CHECK(lattice_volume(pts(3, {{1, 1, 1}})) == 1);
    CHECK_THROWS_AS(lattice_volume(PointSet(2, {})), InvalidInput);
}

TEST_CASE("minkowski sum examples") {
    PointSet zero = pts(2, {{0, 0}});
    PointSet b = pts(2, {{1, 2}, {3, 4}});
    CHECK(minkowski_sum(zero, b).points == b.points);

    PointSet sq = minkowski_sum(pts(2, {{0, 0}, {1, 0}}), pts(2, {{0, 0}, {0, 1}}));
    CHECK(sq.size() == 4);
    CHECK(lattice_volume(sq) == 2);

    PointSet mixed = minkowski_sum(pts(2, {{0, 0}, {1, 1}}), pts(2, {{1, 0}, {0, 1}}));
    CHECK(mixed.size() == 4);
    CHECK(mixed.contains(IntVec{Int(2), Int(1)}));
    CHECK(mixed.contains(IntVec{Int(1), Int(2)}));

    CHECK_THROWS_AS(minkowski_sum(zero, pts(3, {{0, 0, 0}})), InvalidInput);
}

TEST_CASE("volume is invariant under unimodular maps and translations") {
    testgen::Rng rng(47);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 2 + rng.pick(0, 2);
        PointSet ps = rng.point_set(n, 3 + rng.pick(0, 5), -3, 3);
        Int vol = lattice_volume(ps);
        PointSet moved = testgen::transform(ps, rng.unimodular(n), rng.point(n, -5, 5));
        CHECK(lattice_volume(moved) == vol);
    }
}

TEST_CASE("volume is additive over the fan triangulation") {
    testgen::Rng rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng.pick(0, 1);
        PointSet ps = rng.full_dim_set(n, n + 2 + rng.pick(0, 3), 0, 4);
        auto tri = fan_triangulation(ps);
        Int total = 0;
        for (const auto &simplex : tri) {
            CHECK(simplex.size() == n + 1);
            total += lattice_volume(ps.subset(simplex));
        }
        CHECK(total == lattice_volume(ps));
    }
}

TEST_CASE("hull vertices reproduce the hull") {
    testgen::Rng rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng.pick(0, 2);
        PointSet ps = rng.point_set(n, 5 + rng.pick(0, 6), -4, 4);
        PointSet verts = hull_vertices(ps);
        CHECK(verts.size() <= ps.size());
        CHECK(lattice_volume(verts) == lattice_volume(ps));
        CHECK(Polytope(verts).vertex_points() == Polytope(ps).vertex_points());
    }
}

TEST_CASE("vertices are exactly the points outside the hull of the others") {
    testgen::Rng rng(83);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng.pick(0, 1);
        PointSet ps = rng.point_set(n, 4 + rng.pick(0, 3), -2, 2);
        Polytope p(ps);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            std::vector<std::size_t> others;
            for (std::size_t j = 0; j < ps.size(); ++j)
                if (j != i) others.push_back(j);
            bool is_vertex = std::binary_search(p.vertices().begin(), p.vertices().end(), i);
            if (others.empty()) {
                CHECK(is_vertex);
                continue;
            }
            bool inside = Polytope(ps.subset(others)).contains(ps.points[i]);
            CHECK(is_vertex == !inside);
        }
    }
}

TEST_CASE("sum with a full-dimensional set does not shrink volume") {
    testgen::Rng rng(71);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t n = 2 + rng.pick(0, 1);
        PointSet a = rng.full_dim_set(n, n + 2, 0, 3);
        PointSet b = rng.point_set(n, 3, 0, 3);
        CHECK(lattice_volume(minkowski_sum(a, b)) >= lattice_volume(a));
    }
}
