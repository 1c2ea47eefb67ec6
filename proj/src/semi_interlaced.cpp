#include "mixvol/semi_interlaced.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mixvol {

namespace {

std::string index_list(const std::vector<std::size_t> &idx) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
    os << "}";
    return os.str();
}

bool subset_meets_face(const PointSet &mother, const std::vector<std::size_t> &subset, const Face &f) {
    // A subpolytope of the mother hull meets a face of it iff some generator
    // attains the face's support value.
    for (std::size_t i : subset)
        if (dot(f.witness, mother.points[i]) == f.support_value) return true;
    return false;
}

std::vector<IntVec> sorted_points(const PointSet &ps) {
    std::vector<IntVec> v = ps.points;
    std::sort(v.begin(), v.end(), lex_less);
    return v;
}

}  // namespace

DaughterReport check_daughter(const Polytope &mother_hull, const std::vector<Face> &mother_faces,
                              std::vector<std::size_t> daughter) {
    if (daughter.empty()) throw InvalidInput("daughter subset is empty");
    std::sort(daughter.begin(), daughter.end());
    daughter.erase(std::unique(daughter.begin(), daughter.end()), daughter.end());
    const PointSet &mother = mother_hull.source();
    if (daughter.back() >= mother.size()) throw InvalidInput("daughter index out of range");

    DaughterReport rep;

    std::vector<const Face *> disjoint;
    for (const Face &f : mother_faces)
        if (!subset_meets_face(mother, daughter, f)) disjoint.push_back(&f);

    // Keep the inclusion-maximal avoided faces.
    for (const Face *f : disjoint) {
        bool maximal = true;
        for (const Face *g : disjoint) {
            if (g == f || g->point_indices.size() <= f->point_indices.size()) continue;
            if (std::includes(g->point_indices.begin(), g->point_indices.end(), f->point_indices.begin(),
                              f->point_indices.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) rep.removed.push_back(*f);
    }

    for (std::size_t a = 0; a < rep.removed.size(); ++a)
        for (std::size_t b = a + 1; b < rep.removed.size(); ++b) {
            std::vector<std::size_t> inter;
            std::set_intersection(rep.removed[a].point_indices.begin(), rep.removed[a].point_indices.end(),
                                  rep.removed[b].point_indices.begin(), rep.removed[b].point_indices.end(),
                                  std::back_inserter(inter));
            if (!inter.empty()) {
                rep.violation = "avoided faces " + index_list(rep.removed[a].point_indices) + " and " +
                                index_list(rep.removed[b].point_indices) + " are not disjoint";
                return rep;
            }
        }

    std::set<std::size_t> removed_points;
    for (const Face &f : rep.removed) removed_points.insert(f.point_indices.begin(), f.point_indices.end());
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < mother.size(); ++i)
        if (!removed_points.count(i)) kept.push_back(i);

    Polytope d_hull(mother.subset(daughter));
    Polytope kept_hull(mother.subset(kept));
    if (d_hull.vertex_points() != kept_hull.vertex_points()) {
        rep.violation = "daughter hull differs from the hull of the points off the avoided faces";
        return rep;
    }
    rep.accepted = true;
    return rep;
}

DaughterFamily::DaughterFamily(PointSet mother, std::vector<std::vector<std::size_t>> daughters)
    : mother_(std::move(mother)), hull_(mother_), faces_(enumerate_faces(hull_)), daughters_(std::move(daughters)) {
    if (daughters_.size() != mother_.dim)
        throw InvalidInput("need exactly one daughter per ambient dimension");
    removed_.reserve(daughters_.size());
    for (auto &d : daughters_) {
        DaughterReport rep = check_daughter(hull_, faces_, d);
        std::sort(d.begin(), d.end());
        d.erase(std::unique(d.begin(), d.end()), d.end());
        if (!rep.accepted)
            throw InvalidInput("subset " + index_list(d) + " is not a daughter polytope: " + *rep.violation);
        removed_.push_back(std::move(rep.removed));
    }
}

bool DaughterFamily::daughter_meets_face(std::size_t i, const Face &f) const {
    return subset_meets_face(mother_, daughters_[i], f);
}

std::vector<std::size_t> DaughterFamily::daughter_members(std::size_t i) const {
    // A mother point lies in the daughter iff it is off every avoided face.
    std::set<std::size_t> off;
    for (const Face &f : removed_[i]) off.insert(f.point_indices.begin(), f.point_indices.end());
    std::vector<std::size_t> members;
    for (std::size_t p = 0; p < mother_.size(); ++p)
        if (!off.count(p)) members.push_back(p);
    return members;
}

bool is_interlaced(const std::vector<std::vector<std::size_t>> &subsets, const PointSet &mother) {
    if (subsets.empty()) throw InvalidInput("interlacing test needs at least one subpolytope");
    std::set<std::size_t> union_idx;
    for (const auto &s : subsets) {
        if (s.empty()) throw InvalidInput("interlacing test: empty subpolytope");
        union_idx.insert(s.begin(), s.end());
    }
    std::vector<std::size_t> u(union_idx.begin(), union_idx.end());
    PointSet union_pts = mother.subset(u);
    Polytope hull(union_pts);

    // Re-index the subsets into the union point list.
    std::map<std::size_t, std::size_t> to_union;
    for (std::size_t i = 0; i < u.size(); ++i) to_union[u[i]] = i;

    for (const Face &f : enumerate_faces(hull)) {
        if (f.point_indices.size() == union_pts.size()) continue;  // the hull itself
        std::size_t meets = 0;
        for (const auto &s : subsets) {
            std::vector<std::size_t> local;
            local.reserve(s.size());
            for (std::size_t i : s) local.push_back(to_union[i]);
            if (subset_meets_face(union_pts, local, f)) ++meets;
        }
        if (meets < f.dim + 1) return false;
    }
    return true;
}

FaceClassification classify_faces(const DaughterFamily &fam) {
    if (fam.hull().dim() < fam.mother().dim)
        throw InvalidInput("mother set spans only " + std::to_string(fam.hull().dim()) + " of " +
                           std::to_string(fam.mother().dim) + " dimensions");
    FaceClassification out;
    out.semi = true;
    for (const Face &f : fam.faces()) {
        std::size_t meets = 0;
        for (std::size_t i = 0; i < fam.count(); ++i)
            if (fam.daughter_meets_face(i, f)) ++meets;
        if (meets < f.dim) {
            if (out.semi) {
                out.semi = false;
                out.violation = f;
            }
        } else if (meets == f.dim) {
            out.sutures.push_back(f);
        }
    }
    if (!out.semi) out.sutures.clear();
    return out;
}

Int c_coefficient(const PointSet &f, const PointSet &fp) {
    if (f.dim != fp.dim) throw InvalidInput("coefficient of sets in different ambient dimensions");
    if (f.empty() || fp.empty()) throw InvalidInput("coefficient of an empty set");
    std::vector<IntVec> f_sorted = sorted_points(f), fp_sorted = sorted_points(fp);
    if (f_sorted == fp_sorted) return 1;

    Polytope hull(f);
    bool is_face = false;
    for (const Face &g : enumerate_faces(hull)) {
        std::vector<IntVec> g_pts;
        for (std::size_t i : g.point_indices) g_pts.push_back(f.points[i]);
        std::sort(g_pts.begin(), g_pts.end(), lex_less);
        if (g_pts == fp_sorted) {
            is_face = true;
            break;
        }
    }
    if (!is_face) return 0;

    std::size_t dim_f = affine_rank(f.points), dim_fp = affine_rank(fp.points);
    std::size_t codim = dim_f - dim_fp;
    QuotientMap pi = quotient_projection(fp, f.dim);
    PointSet image_f = pi.apply(f);

    std::set<IntVec> fp_set(fp.points.begin(), fp.points.end());
    std::vector<IntVec> rest;
    for (const auto &p : f.points)
        if (!fp_set.count(p)) rest.push_back(p);
    PointSet image_rest = pi.apply(PointSet(f.dim, std::move(rest)));

    return lattice_volume(image_f, codim) - lattice_volume(image_rest, codim);
}

Int restricted_mixed_volume(const DaughterFamily &fam, const Face &suture) {
    if (suture.dim == 0) return 1;  // the empty tuple in the 0-dimensional space
    PointSet s_pts = fam.mother().subset(suture.point_indices);
    AffineChart chart(s_pts.points);
    std::vector<PointSet> restricted;
    for (std::size_t i = 0; i < fam.count(); ++i) {
        if (!fam.daughter_meets_face(i, suture)) continue;
        std::vector<IntVec> pts;
        for (std::size_t p : fam.daughter(i))
            if (dot(suture.witness, fam.mother().points[p]) == suture.support_value)
                pts.push_back(chart.to_local(fam.mother().points[p]));
        restricted.push_back(PointSet(chart.local_dim(), std::move(pts)));
    }
    if (restricted.size() != suture.dim)
        throw InternalError("suture met by " + std::to_string(restricted.size()) + " daughters, expected " +
                            std::to_string(suture.dim));
    return mixed_volume(restricted);
}

SutureTable suture_system(const DaughterFamily &fam, bool oracle_check) {
    FaceClassification cls = classify_faces(fam);
    if (!cls.semi)
        throw PropertyViolation("family is not semi-interlaced; face " + index_list(cls.violation->point_indices) +
                                " of dimension " + std::to_string(cls.violation->dim) + " meets too few daughters");

    SutureTable table;
    table.sutures = std::move(cls.sutures);
    const std::size_t m = table.sutures.size();

    table.v.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        table.v[i] = table.sutures[i].dim == 0
                         ? Int(1)
                         : lattice_volume(fam.mother().subset(table.sutures[i].point_indices));

    table.c = IntMatrix(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        table.c.at(i, i) = 1;
        for (std::size_t j = 0; j < i; ++j) {
            const auto &sub = table.sutures[j].point_indices;
            const auto &sup = table.sutures[i].point_indices;
            if (!std::includes(sup.begin(), sup.end(), sub.begin(), sub.end())) continue;  // not a face
            table.c.at(i, j) = c_coefficient(fam.mother().subset(table.sutures[i].point_indices),
                                             fam.mother().subset(table.sutures[j].point_indices));
        }
    }

    // Unit lower-triangular inverse by forward substitution.
    table.dmat = IntMatrix(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        table.dmat.at(i, i) = 1;
        for (std::size_t j = 0; j < i; ++j) {
            Int s = 0;
            for (std::size_t k = j; k < i; ++k) s += table.c.at(i, k) * table.dmat.at(k, j);
            table.dmat.at(i, j) = -s;
        }
    }
    if (!(table.dmat * table.c == IntMatrix::identity(m)))
        throw InternalError("suture coefficient matrix inversion failed");

    table.vdag.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        Int s = table.v[i];
        for (std::size_t j = 0; j < i; ++j) s -= table.c.at(i, j) * table.vdag[j];
        table.vdag[i] = s;
    }
    if (table.vdag != table.dmat.apply(table.v))
        throw InternalError("suture recursion disagrees with the matrix inverse");

    if (oracle_check) {
        IntVec direct(m);
        for (std::size_t i = 0; i < m; ++i) {
            direct[i] = restricted_mixed_volume(fam, table.sutures[i]);
            if (direct[i] != table.vdag[i])
                throw PropertyViolation("route mismatch on suture " + index_list(table.sutures[i].point_indices) +
                                        ": formula " + table.vdag[i].get_str() + ", mixed volume " +
                                        direct[i].get_str());
        }
        table.vdag_direct = std::move(direct);
    }
    return table;
}

bool polytopes_intersect(const PointSet &a, const PointSet &b) {
    if (a.dim != b.dim) throw InvalidInput("intersection test: dimension mismatch");
    if (a.empty() || b.empty()) return false;
    std::vector<IntVec> diffs;
    diffs.reserve(a.size() * b.size());
    for (const auto &p : a.points)
        for (const auto &q : b.points) diffs.push_back(vec_sub(p, q));
    Polytope hull(PointSet(a.dim, std::move(diffs)));
    return hull.contains(IntVec(a.dim, Int(0)));
}

namespace {

// Lift over deduplicated projected points, each keeping its maximal height.
Lift projected_lift(const std::vector<IntVec> &images, const std::vector<Rat> &heights, std::size_t dim) {
    std::map<IntVec, Rat> best;
    for (std::size_t i = 0; i < images.size(); ++i) {
        auto [it, fresh] = best.emplace(images[i], heights[i]);
        if (!fresh && heights[i] > it->second) it->second = heights[i];
    }
    std::vector<IntVec> pts;
    RatVec h;
    for (const auto &[p, hh] : best) {
        pts.push_back(p);
        h.push_back(hh);
    }
    return Lift(PointSet(dim, std::move(pts)), std::move(h));
}

IntVec integer_direction(const RatVec &xi) {
    Int scale = 1;
    for (const Rat &x : xi) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    IntVec out(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) {
        Rat v = xi[i] * Rat(scale);
        out[i] = v.get_num();
    }
    return out;
}

}  // namespace

LemmaReport verify_main_lemma(const DaughterFamily &fam, const Face &suture) {
    FaceClassification cls = classify_faces(fam);
    const Face *match = nullptr;
    for (const Face &s : cls.sutures)
        if (s.point_indices == suture.point_indices) {
            match = &s;
            break;
        }
    if (!match) throw InvalidInput("face " + index_list(suture.point_indices) + " is not a suture");

    LemmaReport report;
    report.suture = *match;
    const PointSet &mother = fam.mother();
    const std::size_t n = mother.dim, d = match->dim;
    if (match->point_indices.size() == mother.size()) {
        report.trivial = true;  // both sides collapse to the 0-dimensional conventions
        return report;
    }

    std::vector<std::size_t> complement;  // daughters missing the suture
    for (std::size_t i = 0; i < fam.count(); ++i)
        if (!fam.daughter_meets_face(i, *match)) complement.push_back(i);
    if (complement.size() != n - d) throw InternalError("suture complement has the wrong size");

    QuotientMap pi = quotient_projection(mother.subset(match->point_indices), n);
    const std::size_t q = pi.target_dim;
    const IntVec origin(q, Int(0));

    std::vector<IntVec> images = pi.apply_all(mother.points);
    PointSet a_pts(q, images);

    std::set<std::size_t> on_suture(match->point_indices.begin(), match->point_indices.end());
    std::vector<IntVec> b_raw;
    for (std::size_t i = 0; i < mother.size(); ++i)
        if (!on_suture.count(i)) b_raw.push_back(images[i]);
    PointSet b_pts(q, b_raw);

    // The local model: image points surviving in the closure of pi(P) minus
    // pi(Conv(mother \ suture)). A lower-dimensional subtrahend removes nothing.
    std::vector<IntVec> local_model{origin};
    if (affine_rank(b_pts.points) < q) {
        for (const auto &p : a_pts.points) local_model.push_back(p);
    } else {
        Polytope b_hull(b_pts);
        std::vector<const Facet *> active;
        for (const Facet &g : b_hull.facets())
            for (const auto &p : a_pts.points)
                if (dot(g.normal, p) > g.offset) {
                    active.push_back(&g);
                    break;
                }
        for (const auto &p : a_pts.points)
            for (const Facet *g : active)
                if (dot(g->normal, p) >= g->offset) {
                    local_model.push_back(p);
                    break;
                }
    }
    PointSet model_pts(q, std::move(local_model));
    if (!model_pts.contains(origin)) throw InternalError("local model lost the suture image");

    RatVec model_heights(model_pts.size(), Rat(0));
    for (std::size_t i = 0; i < model_pts.size(); ++i)
        if (model_pts.points[i] == origin) model_heights[i] = Rat(-1);
    Lift model_lift(model_pts, model_heights);

    std::vector<Lift> daughter_lifts;
    for (std::size_t j : complement) {
        std::set<std::size_t> members;
        {
            auto m = fam.daughter_members(j);
            members.insert(m.begin(), m.end());
        }
        RatVec h(mother.size());
        for (std::size_t i = 0; i < mother.size(); ++i) h[i] = members.count(i) ? Rat(0) : Rat(-1);
        daughter_lifts.push_back(projected_lift(images, h, q));
    }

    std::vector<PointSet> summands;
    summands.push_back(lifted_points(Lift::flat(a_pts), 1));
    summands.push_back(lifted_points(model_lift, 1));
    for (const Lift &l : daughter_lifts) summands.push_back(lifted_points(l, 1));

    UpperDirections dirs = upper_hull_directions(summands);
    std::vector<RatVec> candidates = dirs.facet_dirs;
    candidates.insert(candidates.end(), dirs.vertex_dirs.begin(), dirs.vertex_dirs.end());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    Lift a_flat = Lift::flat(a_pts);
    std::vector<IntVec> off_suture_images;
    for (const auto &p : model_pts.points)
        if (p != origin) off_suture_images.push_back(p);

    for (const RatVec &xi : candidates) {
        PointSet a_cell = regular_cell(a_flat, xi);
        if (a_cell.size() != 1 || a_cell.points[0] != origin) continue;  // xi must expose the collapsed suture

        LemmaCheck check;
        check.xi = xi;
        std::vector<PointSet> cells;
        for (const Lift &l : daughter_lifts) cells.push_back(regular_cell(l, xi));
        check.lhs = mixed_volume(cells);
        check.rhs = lattice_volume(regular_cell(model_lift, xi), q);
        check.equation_holds = (check.lhs == check.rhs);

        if (!off_suture_images.empty()) {
            Face y = support_face(PointSet(q, off_suture_images), integer_direction(xi));
            PointSet y_pts = PointSet(q, off_suture_images).subset(y.point_indices);
            check.support_dim = y.dim;
            for (std::size_t j : complement) {
                std::vector<IntVec> proj;
                for (std::size_t i : fam.daughter_members(j)) proj.push_back(images[i]);
                if (polytopes_intersect(PointSet(q, std::move(proj)), y_pts)) ++check.meeting_count;
            }
            check.corollary_holds = check.meeting_count >= y.dim + 1;
        } else {
            check.corollary_holds = true;  // nothing off the suture: the statement is vacuous
        }
        report.all_hold = report.all_hold && check.equation_holds && check.corollary_holds;
        report.checks.push_back(std::move(check));
    }
    return report;
}

}  // namespace mixvol
