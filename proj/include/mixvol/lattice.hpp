#pragma once

#include "mixvol/int_matrix.hpp"
#include "mixvol/point_set.hpp"

namespace mixvol {

/// Lattice-exact coordinates on the affine span of a point set.
///
/// Maps aff(points) intersected with Z^n isomorphically onto Z^r, where r is
/// the affine dimension; built from the Smith form of the difference matrix,
/// so the local lattice is the saturation of the difference span.
class AffineChart {
  public:
    explicit AffineChart(const std::vector<IntVec> &points);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t local_dim() const { return rank_; }
    const IntVec &base_point() const { return base_; }

    /// Smith invariants d1 | d2 | ... of the difference lattice.
    const IntVec &invariants() const { return invariants_; }

    IntVec to_local(const IntVec &ambient) const;  // throws if the point is off the span
    IntVec to_global(const IntVec &local) const;
    PointSet to_local(const PointSet &ps) const;

    /// Pulls a local covector back to an ambient one (composition with to_local's
    /// linear part).
    IntVec lift_covector(const IntVec &local_covector) const;

    /// Equations <a,x> = b cutting out the affine span.
    std::vector<std::pair<IntVec, Int>> span_equations() const;

  private:
    std::size_t ambient_dim_, rank_;
    IntVec base_;
    IntMatrix u_;      // unimodular; first rank_ rows give local coordinates
    IntMatrix basis_;  // columns: lattice basis of the saturated difference span
    IntVec invariants_;
};

/// Index of the difference lattice <P - P> inside the saturated lattice of
/// the affine span (product of the nonzero Smith invariants).
Int lattice_index(const PointSet &ps);

/// Integer-linear projection along the affine span of a point set.
struct QuotientMap {
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    IntMatrix map;           // target_dim x source_dim, surjective on lattices
    IntVec offset;           // sends aff(F) to the origin
    IntMatrix kernel_basis;  // columns span ker(map) on the source lattice

    IntVec apply(const IntVec &p) const;
    PointSet apply(const PointSet &ps) const;
    std::vector<IntVec> apply_all(const std::vector<IntVec> &pts) const;
};

/// The projection pi_F: Z^n -> Z^(n - dim aff F), canonicalized by Hermite
/// reduction so repeated runs produce identical matrices.
QuotientMap quotient_projection(const PointSet &f, std::size_t ambient_dim);
QuotientMap quotient_projection(const std::vector<IntVec> &f_points, std::size_t ambient_dim);

}  // namespace mixvol
