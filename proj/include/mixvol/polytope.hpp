#pragma once

#include "mixvol/lattice.hpp"
#include "mixvol/point_set.hpp"

#include <optional>

namespace mixvol {

/// Facet inequality <normal, x> <= offset with primitive integer normal;
/// `tight` lists the source points satisfying it with equality.
struct Facet {
    IntVec normal;
    Int offset;
    std::vector<std::size_t> tight;
};

/// A face of a finite point set: all source points lying on it, a covector
/// whose support face it is, and the affine dimension.
struct Face {
    std::vector<std::size_t> point_indices;  // sorted
    IntVec witness;
    Int support_value;
    std::size_t dim = 0;
};

/// Exact V- and H-representation of the convex hull of a point set.
/// Lower-dimensional hulls carry the affine-span equations alongside facet
/// inequalities valid inside that span.
class Polytope {
  public:
    explicit Polytope(PointSet src);

    const PointSet &source() const { return source_; }
    std::size_t ambient_dim() const { return source_.dim; }
    std::size_t dim() const { return chart_.local_dim(); }
    const AffineChart &chart() const { return chart_; }

    const std::vector<std::size_t> &vertices() const { return vertices_; }  // sorted source indices
    const std::vector<Facet> &facets() const { return facets_; }
    const std::vector<std::pair<IntVec, Int>> &span_equations() const { return span_eqs_; }

    bool contains(const IntVec &p) const;

    /// Sorted coordinates of the vertex points (canonical identity of the hull).
    std::vector<IntVec> vertex_points() const;

  private:
    PointSet source_;
    AffineChart chart_;
    std::vector<std::size_t> vertices_;
    std::vector<Facet> facets_;
    std::vector<std::pair<IntVec, Int>> span_eqs_;
};

Polytope convex_hull(PointSet ps);

Face support_face(const Polytope &p, const IntVec &covector);
Face support_face(const PointSet &ps, const IntVec &covector);

/// All faces of every dimension, P itself included and the empty face
/// excluded, ordered by (dimension, point-index list).
std::vector<Face> enumerate_faces(const Polytope &p);

/// Normalized lattice volume (dim! times Euclidean volume) inside the
/// saturated lattice of the affine span. A single point yields 1, the
/// zero-dimensional convention.
Int lattice_volume(const PointSet &ps);

/// Volume against an expected ambient dimension: sets of lower dimension
/// report 0.
Int lattice_volume(const PointSet &ps, std::size_t expected_dim);

/// Subset of the points that are hull vertices, in input order.
PointSet hull_vertices(const PointSet &ps);

/// Recursive fan triangulation from the lexicographically smallest vertex;
/// returns top-dimensional simplices as source-point index tuples.
std::vector<std::vector<std::size_t>> fan_triangulation(const PointSet &ps);

}  // namespace mixvol
