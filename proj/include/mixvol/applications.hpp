#pragma once

#include "mixvol/semi_interlaced.hpp"

namespace mixvol {

/// Simplicial-times-linear ambient cone, encoded by the primitive facet
/// functionals: facet i is {l_i = 0}, the cone side is l_i >= 0.
struct ConeSpec {
    std::size_t ambient_dim = 0;
    std::vector<IntVec> functionals;  // primitive, linearly independent, at most ambient_dim many

    static ConeSpec orthant(std::size_t n);
    void validate() const;
};

/// Internal generalization used by the degree constructions: affine facet
/// functionals l_i(x) >= offset_i, independence not required.
struct AffineCone {
    std::size_t ambient_dim = 0;
    std::vector<IntVec> functionals;
    IntVec offsets;

    static AffineCone from(const ConeSpec &cone);
};

struct OffCoordinateFamily {
    DaughterFamily family;
    std::vector<bool> facet_touched;  // whether any point lies on facet i
};

/// Daughters obtained by deleting, per cone facet, the points on that facet.
OffCoordinateFamily off_coordinate_family(const PointSet &p, const ConeSpec &cone);
OffCoordinateFamily off_coordinate_family(const PointSet &p, const AffineCone &cone);

enum class VoffRoute { Formula, Oracle, Check };

struct VoffResult {
    Int value = 0;
    bool degenerate = false;  // configuration spans less than the ambient dimension
    std::optional<SutureTable> table;
    std::optional<Int> oracle_value;
    std::vector<bool> facet_touched;
};

/// Mixed volume of the off-coordinate polytopes, by the suture formula
/// (default), by the polarization oracle, or by both with comparison.
VoffResult voff(const PointSet &p, const ConeSpec &cone, VoffRoute route = VoffRoute::Formula);
VoffResult voff(const PointSet &p, const AffineCone &cone, VoffRoute route = VoffRoute::Formula);

/// A face contained in a cone face of the same dimension.
bool is_v_face(const Face &f, const PointSet &p, const AffineCone &cone);

struct NewtonResult {
    Int nu = 0;
    bool check_applicable = false;  // the simplex vertex set lies in the points
    std::optional<Int> voff_value;
};

/// Alternating sum of coordinate-subspace volumes of a convenient polytope;
/// optionally cross-checked against the orthant off-coordinate mixed volume.
NewtonResult newton_number(const PointSet &p, bool check = false);

struct BkDecomposition {
    std::size_t k = 0;
    std::vector<std::size_t> coords;          // chosen coordinates, 0-based
    IntVec stretch;                           // the common positive level per chosen coordinate
    std::vector<std::vector<IntVec>> blocks;  // P_0, then P_1..P_k, in Z^(n-k)
};

/// First decomposition (k ascending, coordinate subsets lexicographic)
/// exhibiting the set as a stretched Cayley sum with degenerate top blocks.
std::optional<BkDecomposition> detect_stretched_bk(const PointSet &p);

struct OrbitMultiplicity {
    std::vector<std::size_t> face;  // point indices of the face
    std::size_t face_dim = 0;
    Int multiplicity = 1;
    bool smooth_along_orbit = true;
};

/// Multiplicity of the projective toric variety of the set along the orbit of
/// one face: (index of the face set) * (coefficient) / (index of the set).
OrbitMultiplicity orbit_multiplicity(const PointSet &p, const std::vector<std::size_t> &face_indices);

struct ToricReport {
    std::vector<OrbitMultiplicity> orbits;  // every face, ascending (dim, key)
    bool smooth = true;                     // all multiplicities equal 1
};
ToricReport toric_orbit_report(const PointSet &p);

struct CayleyInput {
    std::size_t block_dim = 0;       // dimension of the torus factor
    std::vector<PointSet> supports;  // each in Z^block_dim
};

struct DegreeResult {
    Int value = 0;
    bool degenerate = false;
    std::optional<Int> oracle_value;
};

/// The three algebraic degrees, computed as off-coordinate mixed volumes of
/// Cayley configurations.
DegreeResult ml_degree(const CayleyInput &in, const IntVec &u, VoffRoute route = VoffRoute::Formula);
DegreeResult ed_degree(const CayleyInput &in, VoffRoute route = VoffRoute::Formula);
DegreeResult polar_degree(const PointSet &support, const Int &degree, VoffRoute route = VoffRoute::Formula);

/// Blocks placed at lattice levels 0, e_1, ..., e_k; level coordinates first.
PointSet cayley_sum(const std::vector<std::vector<IntVec>> &blocks, std::size_t block_dim);

}  // namespace mixvol
