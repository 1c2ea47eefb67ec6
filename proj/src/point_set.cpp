#include "mixvol/point_set.hpp"

#include "mixvol/int_matrix.hpp"

#include <set>

namespace mixvol {

PointSet::PointSet(std::size_t dim_, std::vector<IntVec> pts) : dim(dim_) {
    if (dim == 0) throw InvalidInput("point set needs ambient dimension >= 1");
    std::set<IntVec> seen;
    points.reserve(pts.size());
    for (auto &p : pts) {
        if (p.size() != dim) throw InvalidInput("point length does not match ambient dimension");
        if (seen.insert(p).second) points.push_back(std::move(p));
    }
}

bool PointSet::contains(const IntVec &p) const {
    for (const auto &q : points)
        if (q == p) return true;
    return false;
}

PointSet PointSet::subset(std::span<const std::size_t> indices) const {
    std::vector<IntVec> pts;
    pts.reserve(indices.size());
    for (std::size_t i : indices) {
        if (i >= points.size()) throw InvalidInput("point index out of range");
        pts.push_back(points[i]);
    }
    return PointSet(dim, std::move(pts));
}

PointSet PointSet::translated(const IntVec &offset) const {
    std::vector<IntVec> pts;
    pts.reserve(points.size());
    for (const auto &p : points) pts.push_back(vec_add(p, offset));
    return PointSet(dim, std::move(pts));
}

bool lex_less(const IntVec &a, const IntVec &b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return a.size() < b.size();
}

std::size_t affine_rank(const std::vector<IntVec> &points) {
    if (points.size() <= 1) return 0;
    std::vector<IntVec> diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(vec_sub(points[i], points[0]));
    return rank(IntMatrix::from_rows(diffs));
}

PointSet minkowski_sum(const PointSet &a, const PointSet &b) {
    if (a.dim != b.dim) throw InvalidInput("Minkowski sum of sets in different dimensions");
    if (a.empty() || b.empty()) throw InvalidInput("Minkowski sum of an empty set");
    std::set<IntVec> seen;
    std::vector<IntVec> pts;
    for (const auto &p : a.points)
        for (const auto &q : b.points) {
            IntVec s = vec_add(p, q);
            if (seen.insert(s).second) pts.push_back(std::move(s));
        }
    return PointSet(a.dim, std::move(pts));
}

PointSet dilate(const PointSet &a, const Int &k) {
    std::vector<IntVec> pts;
    pts.reserve(a.size());
    for (const auto &p : a.points) {
        IntVec q(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) q[i] = k * p[i];
        pts.push_back(std::move(q));
    }
    return PointSet(a.dim, std::move(pts));
}

}  // namespace mixvol
