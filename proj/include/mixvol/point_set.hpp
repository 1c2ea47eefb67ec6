#pragma once

#include "mixvol/numeric.hpp"

#include <cstddef>
#include <span>

namespace mixvol {

/// A finite set of integer points: distinct, kept in first-seen input order.
struct PointSet {
    std::size_t dim = 0;
    std::vector<IntVec> points;

    PointSet() = default;
    PointSet(std::size_t dim_, std::vector<IntVec> pts);

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    bool contains(const IntVec &p) const;

    PointSet subset(std::span<const std::size_t> indices) const;
    PointSet translated(const IntVec &offset) const;
};

bool lex_less(const IntVec &a, const IntVec &b);

/// Affine dimension of the point set (rank of the difference lattice span).
std::size_t affine_rank(const std::vector<IntVec> &points);

PointSet minkowski_sum(const PointSet &a, const PointSet &b);

/// p -> k*p pointwise (homothety of the generating set).
PointSet dilate(const PointSet &a, const Int &k);

}  // namespace mixvol
