#include "mixvol/polytope.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace mixvol {

namespace {

// Normal of the hyperplane through d points in Z^d, via cofactor expansion.
IntVec hyperplane_normal(const std::vector<IntVec> &pts, const std::vector<std::size_t> &verts) {
    const std::size_t d = verts.size();
    std::vector<IntVec> diffs;
    diffs.reserve(d - 1);
    for (std::size_t i = 1; i < d; ++i) diffs.push_back(vec_sub(pts[verts[i]], pts[verts[0]]));
    IntVec normal(d);
    for (std::size_t k = 0; k < d; ++k) {
        IntMatrix minor(d - 1, d - 1);
        for (std::size_t i = 0; i + 1 < d; ++i) {
            std::size_t cc = 0;
            for (std::size_t j = 0; j < d; ++j) {
                if (j == k) continue;
                minor.at(i, cc++) = diffs[i][j];
            }
        }
        Int det = determinant(minor);
        normal[k] = (k % 2 == 0) ? det : -det;
    }
    return normal;
}

// Incremental (beneath-beyond) hull over exact integers in full-dimensional
// local coordinates. Keeps a triangulated boundary.
class HullBuilder {
  public:
    struct Simplex {
        std::vector<std::size_t> verts;  // d point indices, sorted
        IntVec normal;                   // outward, <normal, x> <= offset
        Int offset;
    };

    HullBuilder(const std::vector<IntVec> &pts, std::size_t d) : pts_(pts), d_(d) { build(); }

    const std::vector<Simplex> &boundary() const { return facets_; }

    Int volume() const {
        std::size_t v0 = 0;
        for (std::size_t i = 1; i < pts_.size(); ++i)
            if (lex_less(pts_[i], pts_[v0])) v0 = i;
        Int vol = 0;
        IntMatrix m(d_, d_);
        for (const Simplex &f : facets_) {
            for (std::size_t i = 0; i < d_; ++i) {
                IntVec diff = vec_sub(pts_[f.verts[i]], pts_[v0]);
                for (std::size_t j = 0; j < d_; ++j) m.at(i, j) = diff[j];
            }
            vol += abs(determinant(m));
        }
        return vol;
    }

  private:
    const std::vector<IntVec> &pts_;
    std::size_t d_;
    IntVec ref_sum_;  // sum of the initial simplex vertices; strictly interior after scaling
    std::vector<Simplex> facets_;

    Simplex make_facet(std::vector<std::size_t> verts) {
        std::sort(verts.begin(), verts.end());
        Simplex f;
        f.normal = hyperplane_normal(pts_, verts);
        f.offset = dot(f.normal, pts_[verts[0]]);
        Int side = dot(f.normal, ref_sum_) - Int(d_ + 1) * f.offset;
        if (side > 0) {
            for (Int &x : f.normal) x = -x;
            f.offset = -f.offset;
        } else if (side == 0) {
            throw InternalError("hull: reference point on a facet hyperplane");
        }
        f.verts = std::move(verts);
        return f;
    }

    void build() {
        // Greedily pick d+1 affinely independent points.
        std::vector<std::size_t> simplex{0};
        std::vector<IntVec> diffs;
        for (std::size_t i = 1; i < pts_.size() && simplex.size() <= d_; ++i) {
            diffs.push_back(vec_sub(pts_[i], pts_[0]));
            if (rank(IntMatrix::from_rows(diffs)) == simplex.size())
                simplex.push_back(i);
            else
                diffs.pop_back();
        }
        if (simplex.size() != d_ + 1) throw InternalError("hull: point set is not full-dimensional");

        ref_sum_.assign(d_, Int(0));
        for (std::size_t v : simplex) ref_sum_ = vec_add(ref_sum_, pts_[v]);

        for (std::size_t omit = 0; omit <= d_; ++omit) {
            std::vector<std::size_t> verts;
            for (std::size_t i = 0; i <= d_; ++i)
                if (i != omit) verts.push_back(simplex[i]);
            facets_.push_back(make_facet(std::move(verts)));
        }

        std::set<std::size_t> used(simplex.begin(), simplex.end());
        for (std::size_t p = 0; p < pts_.size(); ++p) {
            if (used.count(p)) continue;
            insert_point(p);
        }
    }

    void insert_point(std::size_t p) {
        std::vector<std::size_t> visible;
        for (std::size_t i = 0; i < facets_.size(); ++i)
            if (dot(facets_[i].normal, pts_[p]) > facets_[i].offset) visible.push_back(i);
        if (visible.empty()) return;

        std::map<std::vector<std::size_t>, int> ridge_count;
        for (std::size_t fi : visible) {
            const auto &verts = facets_[fi].verts;
            for (std::size_t omit = 0; omit < verts.size(); ++omit) {
                std::vector<std::size_t> ridge;
                for (std::size_t i = 0; i < verts.size(); ++i)
                    if (i != omit) ridge.push_back(verts[i]);
                ++ridge_count[ridge];
            }
        }

        std::vector<Simplex> next;
        next.reserve(facets_.size());
        std::set<std::size_t> vis(visible.begin(), visible.end());
        for (std::size_t i = 0; i < facets_.size(); ++i)
            if (!vis.count(i)) next.push_back(std::move(facets_[i]));
        for (auto &[ridge, cnt] : ridge_count) {
            if (cnt != 1) continue;  // interior to the visible region
            std::vector<std::size_t> verts = ridge;
            verts.push_back(p);
            next.push_back(make_facet(std::move(verts)));
        }
        facets_ = std::move(next);
    }
};

struct MergedFacet {
    IntVec normal;  // primitive, local coords
    Int offset;
};

std::vector<MergedFacet> merge_facets(const HullBuilder &hb) {
    std::map<std::pair<IntVec, Int>, MergedFacet> seen;
    for (const auto &f : hb.boundary()) {
        IntVec n = f.normal;
        Int g = 0;
        for (const Int &x : n) g = gcd(g, x);
        Int c = f.offset;
        if (g > 1) {
            for (Int &x : n) x = exact_div(x, g);
            c = exact_div(c, g);
        }
        seen.emplace(std::make_pair(n, c), MergedFacet{n, c});
    }
    std::vector<MergedFacet> out;
    out.reserve(seen.size());
    for (auto &[k, v] : seen) out.push_back(std::move(v));
    return out;
}

}  // namespace

Polytope::Polytope(PointSet src) : source_(std::move(src)), chart_(source_.points) {
    if (source_.empty()) throw InvalidInput("convex hull of an empty set");
    span_eqs_ = chart_.span_equations();
    const std::size_t d = chart_.local_dim();
    if (d == 0) {
        vertices_ = {0};
        return;
    }

    std::vector<IntVec> local;
    local.reserve(source_.size());
    for (const auto &p : source_.points) local.push_back(chart_.to_local(p));

    HullBuilder hb(local, d);
    std::vector<MergedFacet> merged = merge_facets(hb);

    facets_.reserve(merged.size());
    for (std::size_t fi = 0; fi < merged.size(); ++fi) {
        const auto &mf = merged[fi];
        Facet f;
        f.normal = chart_.lift_covector(mf.normal);
        Int shift = dot(f.normal, chart_.base_point());
        f.offset = mf.offset + shift;
        Int g = 0;
        for (const Int &x : f.normal) g = gcd(g, x);
        if (g > 1) {
            for (Int &x : f.normal) x = exact_div(x, g);
            f.offset = exact_div(f.offset, g);
        }
        for (std::size_t i = 0; i < local.size(); ++i)
            if (dot(mf.normal, local[i]) == mf.offset) f.tight.push_back(i);
        facets_.push_back(std::move(f));
    }
    std::sort(facets_.begin(), facets_.end(), [](const Facet &a, const Facet &b) {
        if (a.normal != b.normal) return std::lexicographical_compare(a.normal.begin(), a.normal.end(), b.normal.begin(), b.normal.end());
        return a.offset < b.offset;
    });

    // A point is a vertex iff its tight facet normals span the full local space.
    for (std::size_t i = 0; i < local.size(); ++i) {
        std::vector<IntVec> tight_normals;
        for (const auto &mf : merged)
            if (dot(mf.normal, local[i]) == mf.offset) tight_normals.push_back(mf.normal);
        if (tight_normals.size() >= d && rank(IntMatrix::from_rows(tight_normals)) == d) vertices_.push_back(i);
    }
}

bool Polytope::contains(const IntVec &p) const {
    if (p.size() != ambient_dim()) throw InvalidInput("containment test: dimension mismatch");
    for (const auto &[a, b] : span_eqs_)
        if (dot(a, p) != b) return false;
    for (const auto &f : facets_)
        if (dot(f.normal, p) > f.offset) return false;
    return true;
}

std::vector<IntVec> Polytope::vertex_points() const {
    std::vector<IntVec> vp;
    vp.reserve(vertices_.size());
    for (std::size_t i : vertices_) vp.push_back(source_.points[i]);
    std::sort(vp.begin(), vp.end(), lex_less);
    return vp;
}

Polytope convex_hull(PointSet ps) { return Polytope(std::move(ps)); }

Face support_face(const PointSet &ps, const IntVec &covector) {
    if (ps.empty()) throw InvalidInput("support face of an empty set");
    if (covector.size() != ps.dim) throw InvalidInput("support face: covector dimension mismatch");
    Face f;
    f.witness = covector;
    f.support_value = dot(covector, ps.points[0]);
    for (std::size_t i = 1; i < ps.size(); ++i) {
        Int v = dot(covector, ps.points[i]);
        if (v > f.support_value) f.support_value = v;
    }
    std::vector<IntVec> on_face;
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (dot(covector, ps.points[i]) == f.support_value) {
            f.point_indices.push_back(i);
            on_face.push_back(ps.points[i]);
        }
    f.dim = affine_rank(on_face);
    return f;
}

Face support_face(const Polytope &p, const IntVec &covector) { return support_face(p.source(), covector); }

std::vector<Face> enumerate_faces(const Polytope &p) {
    const std::size_t m = p.source().size();
    std::vector<std::size_t> all(m);
    for (std::size_t i = 0; i < m; ++i) all[i] = i;

    std::set<std::vector<std::size_t>> seen;
    std::queue<std::vector<std::size_t>> work;
    seen.insert(all);
    work.push(all);
    while (!work.empty()) {
        std::vector<std::size_t> g = std::move(work.front());
        work.pop();
        for (const auto &f : p.facets()) {
            std::vector<std::size_t> inter;
            std::set_intersection(g.begin(), g.end(), f.tight.begin(), f.tight.end(), std::back_inserter(inter));
            if (inter.empty() || inter == g) continue;
            if (seen.insert(inter).second) work.push(inter);
        }
    }

    std::vector<Face> faces;
    faces.reserve(seen.size());
    for (const auto &idx : seen) {
        Face face;
        face.point_indices = idx;
        face.witness.assign(p.ambient_dim(), Int(0));
        face.support_value = 0;
        for (const auto &f : p.facets())
            if (std::includes(f.tight.begin(), f.tight.end(), idx.begin(), idx.end())) {
                face.witness = vec_add(face.witness, f.normal);
                face.support_value += f.offset;
            }
        std::vector<IntVec> pts;
        for (std::size_t i : idx) pts.push_back(p.source().points[i]);
        face.dim = affine_rank(pts);
        faces.push_back(std::move(face));
    }
    std::sort(faces.begin(), faces.end(), [](const Face &a, const Face &b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.point_indices < b.point_indices;
    });
    return faces;
}

Int lattice_volume(const PointSet &ps) {
    if (ps.empty()) throw InvalidInput("volume of an empty set");
    AffineChart chart(ps.points);
    const std::size_t d = chart.local_dim();
    if (d == 0) return 1;
    std::vector<IntVec> local;
    local.reserve(ps.size());
    for (const auto &p : ps.points) local.push_back(chart.to_local(p));
    return HullBuilder(local, d).volume();
}

Int lattice_volume(const PointSet &ps, std::size_t expected_dim) {
    if (ps.empty()) throw InvalidInput("volume of an empty set");
    std::size_t d = affine_rank(ps.points);
    if (d < expected_dim) return 0;
    if (d > expected_dim) throw InternalError("volume: set exceeds the expected dimension");
    return lattice_volume(ps);
}

PointSet hull_vertices(const PointSet &ps) {
    Polytope p(ps);
    std::vector<IntVec> pts;
    pts.reserve(p.vertices().size());
    for (std::size_t i : p.vertices()) pts.push_back(ps.points[i]);
    return PointSet(ps.dim, std::move(pts));
}

namespace {

void fan_triangulate_rec(const PointSet &ps, const std::vector<std::size_t> &face_idx, std::size_t face_dim,
                         std::vector<std::vector<std::size_t>> &out_partial, std::vector<std::size_t> &apexes) {
    if (face_dim == 0) {
        std::vector<std::size_t> simplex = apexes;
        simplex.push_back(face_idx[0]);
        out_partial.push_back(std::move(simplex));
        return;
    }
    Polytope sub(ps.subset(face_idx));
    // Lexicographically smallest vertex of this face.
    std::size_t best = sub.vertices()[0];
    for (std::size_t v : sub.vertices())
        if (lex_less(sub.source().points[v], sub.source().points[best])) best = v;

    apexes.push_back(face_idx[best]);
    for (const auto &f : sub.facets()) {
        bool has_best = std::binary_search(f.tight.begin(), f.tight.end(), best);
        if (has_best) continue;
        std::vector<std::size_t> sub_idx;
        sub_idx.reserve(f.tight.size());
        for (std::size_t local : f.tight) sub_idx.push_back(face_idx[local]);
        fan_triangulate_rec(ps, sub_idx, face_dim - 1, out_partial, apexes);
    }
    apexes.pop_back();
}

}  // namespace

std::vector<std::vector<std::size_t>> fan_triangulation(const PointSet &ps) {
    if (ps.empty()) throw InvalidInput("triangulation of an empty set");
    std::vector<std::size_t> all(ps.size());
    for (std::size_t i = 0; i < ps.size(); ++i) all[i] = i;
    std::size_t d = affine_rank(ps.points);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> apexes;
    fan_triangulate_rec(ps, all, d, out, apexes);
    for (auto &s : out) std::sort(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mixvol
