#pragma once

#include "mixvol/mixed_volume.hpp"

#include <optional>
#include <string>

namespace mixvol {

/// Result of testing one subpolytope against the daughter conditions:
/// the removed faces must be pairwise disjoint and must account exactly for
/// the points outside the daughter.
struct DaughterReport {
    bool accepted = false;
    std::vector<Face> removed;  // maximal faces of the mother hull avoided by the daughter
    std::optional<std::string> violation;
};

DaughterReport check_daughter(const Polytope &mother_hull, const std::vector<Face> &mother_faces,
                              std::vector<std::size_t> daughter);

/// A mother point set with n daughter subpolytopes, validated on construction.
class DaughterFamily {
  public:
    DaughterFamily(PointSet mother, std::vector<std::vector<std::size_t>> daughters);

    const PointSet &mother() const { return mother_; }
    const Polytope &hull() const { return hull_; }
    const std::vector<Face> &faces() const { return faces_; }
    std::size_t count() const { return daughters_.size(); }
    const std::vector<std::size_t> &daughter(std::size_t i) const { return daughters_[i]; }
    const std::vector<Face> &removed(std::size_t i) const { return removed_[i]; }

    PointSet daughter_points(std::size_t i) const { return mother_.subset(daughters_[i]); }
    bool daughter_meets_face(std::size_t i, const Face &f) const;

    /// Mother points lying in the daughter polytope (not only its generators).
    std::vector<std::size_t> daughter_members(std::size_t i) const;

  private:
    PointSet mother_;
    Polytope hull_;
    std::vector<Face> faces_;
    std::vector<std::vector<std::size_t>> daughters_;
    std::vector<std::vector<Face>> removed_;
};

/// Every proper face of Conv(union of the subpolytopes) must meet strictly
/// more subpolytopes than its dimension.
bool is_interlaced(const std::vector<std::vector<std::size_t>> &subsets, const PointSet &mother);

struct FaceClassification {
    bool semi = false;
    std::vector<Face> sutures;  // faces met by exactly dim-many daughters, ascending (dim, key)
    std::optional<Face> violation;
};

/// Classifies every face of the mother hull by how many daughters meet it.
FaceClassification classify_faces(const DaughterFamily &fam);

/// The combinatorial coefficient of a face pair: 1 on equality, 0 when fp is
/// not a face of f, otherwise the volume drop of the projected sets.
Int c_coefficient(const PointSet &f, const PointSet &fp);

struct SutureTable {
    std::vector<Face> sutures;               // ascending (dim, point-index key)
    IntMatrix c;                             // c[i][j] = coefficient of suture j inside suture i
    IntMatrix dmat;                          // exact integer inverse of c
    IntVec v;                                // lattice volumes (vertices count 1)
    IntVec vdag;                             // mixed-volume vector; last entry is MV(D_1..D_n)
    std::optional<IntVec> vdag_direct;       // oracle route per suture, when requested

    Int mixed_volume_of_family() const { return vdag.back(); }
};

/// Solves the suture recursion; with `oracle_check` every component is also
/// recomputed as a restricted mixed volume and compared.
SutureTable suture_system(const DaughterFamily &fam, bool oracle_check = false);

/// MV of the daughters meeting the suture, restricted to it and computed in
/// the saturated lattice of its affine span; 1 for vertex sutures.
Int restricted_mixed_volume(const DaughterFamily &fam, const Face &suture);

/// Exact intersection test between two polytopes given by generating points.
bool polytopes_intersect(const PointSet &a, const PointSet &b);

struct LemmaCheck {
    RatVec xi;
    Int lhs = 0;   // mixed volume of the complementary-daughter cells
    Int rhs = 0;   // volume of the local-model cell
    bool equation_holds = false;
    std::size_t support_dim = 0;
    std::size_t meeting_count = 0;
    bool corollary_holds = false;
};

struct LemmaReport {
    Face suture;
    bool trivial = false;  // the suture is the whole polytope
    std::vector<LemmaCheck> checks;
    bool all_hold = true;
};

/// Verifies the local mixed-volume identity and the accompanying
/// nondegeneracy count for one suture, over representative directions of the
/// refined normal fan around the suture's collapsed image.
LemmaReport verify_main_lemma(const DaughterFamily &fam, const Face &suture);

}  // namespace mixvol
