#pragma once

#include "mixvol/polytope.hpp"

#include <optional>

namespace mixvol {

/// Lattice mixed volume of n point sets in Z^n via the polarization
/// (inclusion-exclusion) identity over subset Minkowski-sum volumes.
/// The empty tuple in a 0-dimensional space has mixed volume 1.
Int mixed_volume(const std::vector<PointSet> &ps);

/// Some subset S with dim(sum of the S-members) < |S| if one exists (then the
/// mixed volume is 0), searched by increasing size then lexicographically;
/// nullopt otherwise (then the mixed volume is positive). 0-based indices.
std::optional<std::vector<std::size_t>> mv_zero_witness(const std::vector<PointSet> &ps);

/// Product formula when the first k sets lie in a common k-dimensional affine
/// subspace Q: MV(P1..Pk inside Q) times MV of the quotient images of the rest.
Int mv_split(const std::vector<PointSet> &ps, std::size_t k);

/// A height function on a finite point set; generates the regular subdivision
/// by the lower envelope of heights (faces supported by (xi, 1) on the
/// downward-closed lift).
struct Lift {
    PointSet base;
    RatVec heights;

    Lift(PointSet b, RatVec h);
    static Lift flat(PointSet b);
};

/// The cell of the regular subdivision at direction xi: base points whose
/// lifted copies maximize <(xi,1), .>.
PointSet regular_cell(const Lift &lift, const RatVec &xi);

struct KhovanskiiTerm {
    RatVec xi;
    std::vector<PointSet> cells;
    Int value;
};

struct MVReport {
    Int value = 0;
    std::vector<KhovanskiiTerm> per_xi;
};

/// Mixed volume as the sum over subdivision directions of per-cell mixed
/// volumes; the directions are the upper facet normals of the summed lifts.
MVReport khovanskii_mv(const std::vector<Lift> &lifts);

/// Fold of Minkowski sums with per-summand vertex reduction; exact hull of
/// the result equals the hull of the plain fold.
PointSet minkowski_fold(const std::vector<PointSet> &summands);

/// Directions spanning the upper normal fan of Conv(sum of lifted summands):
/// one per upper facet, plus one interior direction per upper vertex.
/// Both come normalized so the last lifted coordinate is 1 and are returned
/// without the head/tail split (length = base dimension).
struct UpperDirections {
    std::vector<RatVec> facet_dirs;
    std::vector<RatVec> vertex_dirs;
};
UpperDirections upper_hull_directions(const std::vector<PointSet> &lifted_summands);

/// Finite stand-in for a downward-closed lifted polyhedron: the lifted points
/// together with copies dropped by one.
PointSet lifted_points(const Lift &lift, const Int &height_scale);

}  // namespace mixvol
