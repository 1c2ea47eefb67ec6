#include "mixvol/jobio.hpp"

#include <map>
#include <set>
#include <sstream>

namespace mixvol::jobio {

namespace {

[[noreturn]] void fail(const std::string &path, const std::string &what) {
    throw InvalidInput(path + ": " + what);
}

const Json &field(const Json &j, const std::string &key, const std::string &path) {
    if (!j.is_object()) fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(path + "." + key, "missing");
    return *it;
}

const Json *optional_field(const Json &j, const std::string &key) {
    if (!j.is_object()) return nullptr;
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

std::size_t get_count(const Json &j, const std::string &path) {
    if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0) fail(path, "expected a positive count");
    return j.get<std::size_t>();
}

Int get_int(const Json &j, const std::string &path) {
    if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
    if (!j.is_string()) fail(path, "expected a decimal integer string");
    try {
        return parse_int(j.get<std::string>());
    } catch (const InvalidInput &e) {
        fail(path, e.what());
    }
}

IntVec get_vector(const Json &j, std::size_t dim, const std::string &path) {
    if (!j.is_array() || j.size() != dim)
        fail(path, "expected an array of " + std::to_string(dim) + " integers");
    IntVec v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = get_int(j[i], path + "[" + std::to_string(i) + "]");
    return v;
}

std::vector<IntVec> get_vectors(const Json &j, std::size_t dim, const std::string &path) {
    if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of points");
    std::vector<IntVec> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_vector(j[i], dim, path + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::size_t> get_indices(const Json &j, std::size_t limit, const std::string &path) {
    if (!j.is_array() || j.empty()) fail(path, "expected a nonempty array of point indices");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json &e = j[i];
        if (!e.is_number_unsigned()) fail(path + "[" + std::to_string(i) + "]", "expected an index");
        std::size_t v = e.get<std::size_t>();
        if (v >= limit) fail(path + "[" + std::to_string(i) + "]", "index out of range");
        out.push_back(v);
    }
    return out;
}

struct ParsedJob {
    std::size_t dim = 0;
    PointSet points{1, {IntVec{Int(0)}}};
    bool has_points = false;
};

ParsedJob parse_points(const Json &job) {
    ParsedJob p;
    p.dim = get_count(field(job, "dim", "job"), "job.dim");
    const Json *pts = optional_field(job, "points");
    if (pts) {
        p.points = PointSet(p.dim, get_vectors(*pts, p.dim, "job.points"));
        p.has_points = true;
    }
    return p;
}

PointSet require_points(const Json &job) {
    ParsedJob p = parse_points(job);
    if (!p.has_points) fail("job.points", "missing");
    return p.points;
}

std::vector<std::vector<std::size_t>> require_daughters(const Json &job, std::size_t limit) {
    const Json &d = field(job, "daughters", "job");
    if (!d.is_array() || d.empty()) fail("job.daughters", "expected a nonempty array of index lists");
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < d.size(); ++i)
        out.push_back(get_indices(d[i], limit, "job.daughters[" + std::to_string(i) + "]"));
    return out;
}

ConeSpec parse_cone(const Json &job, std::size_t dim) {
    const Json *c = optional_field(job, "cone");
    if (!c) return ConeSpec::orthant(dim);
    ConeSpec cone;
    cone.ambient_dim = dim;
    const Json &fns = field(*c, "functionals", "job.cone");
    if (!fns.is_array()) fail("job.cone.functionals", "expected an array of covectors");
    for (std::size_t i = 0; i < fns.size(); ++i)
        cone.functionals.push_back(get_vector(fns[i], dim, "job.cone.functionals[" + std::to_string(i) + "]"));
    cone.validate();
    return cone;
}

CayleyInput parse_blocks(const Json &job) {
    const Json &b = field(job, "blocks", "job");
    CayleyInput in;
    in.block_dim = get_count(field(b, "block_dim", "job.blocks"), "job.blocks.block_dim");
    const Json &sup = field(b, "supports", "job.blocks");
    if (!sup.is_array() || sup.empty()) fail("job.blocks.supports", "expected a nonempty array of point lists");
    for (std::size_t i = 0; i < sup.size(); ++i)
        in.supports.push_back(
            PointSet(in.block_dim, get_vectors(sup[i], in.block_dim, "job.blocks.supports[" + std::to_string(i) + "]")));
    return in;
}

// ---- emission helpers ----------------------------------------------------

Json emit_int(const Int &v) { return v.get_str(); }

Json emit_vec(const IntVec &v) {
    Json a = Json::array();
    for (const Int &x : v) a.push_back(emit_int(x));
    return a;
}

Json emit_rat_vec(const RatVec &v) {
    Json a = Json::array();
    for (const Rat &x : v) a.push_back(x.get_str());
    return a;
}

Json emit_matrix(const IntMatrix &m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(emit_vec(m.row(i)));
    return rows;
}

Json emit_index_list(const std::vector<std::size_t> &v) {
    Json a = Json::array();
    for (std::size_t x : v) a.push_back(x);
    return a;
}

Json emit_face(const Face &f) {
    Json j;
    j["points"] = emit_index_list(f.point_indices);
    j["dim"] = f.dim;
    j["witness"] = emit_vec(f.witness);
    return j;
}

Json emit_table(const SutureTable &t) {
    Json j;
    Json sutures = Json::array();
    for (const Face &s : t.sutures) sutures.push_back(emit_face(s));
    j["sutures"] = sutures;
    j["v"] = emit_vec(t.v);
    j["C"] = emit_matrix(t.c);
    j["D"] = emit_matrix(t.dmat);
    j["vdag"] = emit_vec(t.vdag);
    j["mixed_volume"] = emit_int(t.mixed_volume_of_family());
    if (t.vdag_direct) j["vdag_oracle"] = emit_vec(*t.vdag_direct);
    return j;
}

// One-based in documents; internal indices are zero-based.
Json emit_one_based(const std::vector<std::size_t> &v) {
    Json a = Json::array();
    for (std::size_t x : v) a.push_back(x + 1);
    return a;
}

DaughterFamily build_family(const PointSet &points, const Json &job, const Flags &, bool *from_cone = nullptr) {
    if (optional_field(job, "daughters")) {
        if (from_cone) *from_cone = false;
        auto subsets = require_daughters(job, points.size());
        Polytope hull(points);
        auto faces = enumerate_faces(hull);
        for (std::size_t i = 0; i < subsets.size(); ++i) {
            DaughterReport rep = check_daughter(hull, faces, subsets[i]);
            if (!rep.accepted)
                throw PropertyViolation("daughter " + std::to_string(i + 1) + " rejected: " + *rep.violation);
        }
        return DaughterFamily(points, subsets);
    }
    if (from_cone) *from_cone = true;
    return off_coordinate_family(points, parse_cone(job, points.dim)).family;
}

VoffRoute route_of(const Flags &flags) {
    if (flags.check) return VoffRoute::Check;
    if (flags.oracle) return VoffRoute::Oracle;
    return VoffRoute::Formula;
}

Document run_volume(const Flags &flags, const Json &job) {
    PointSet p = require_points(job);
    Document doc;
    doc.body["command"] = "volume";
    doc.body["ambient_dim"] = p.dim;
    doc.body["dim"] = affine_rank(p.points);
    Int vol = lattice_volume(p);
    doc.body["volume"] = emit_int(vol);
    if (flags.check) {
        Int sum = 0;
        for (const auto &simplex : fan_triangulation(p)) sum += lattice_volume(p.subset(simplex));
        if (sum != vol)
            throw PropertyViolation("triangulation sums to " + sum.get_str() + ", volume is " + vol.get_str());
        doc.body["triangulation_volume"] = emit_int(sum);
    }
    return doc;
}

Document run_mixed_volume(const Flags &flags, const Json &job) {
    PointSet p = require_points(job);
    auto subsets = require_daughters(job, p.size());
    std::vector<PointSet> tuple;
    for (const auto &s : subsets) tuple.push_back(p.subset(s));
    Document doc;
    doc.body["command"] = "mixed-volume";
    Int mv = mixed_volume(tuple);
    doc.body["mixed_volume"] = emit_int(mv);
    auto witness = mv_zero_witness(tuple);
    doc.body["zero_witness"] = witness ? emit_one_based(*witness) : Json();
    if (flags.check) {
        // Independent route: subdivide along a deterministic nontrivial lift
        // and sum the per-cell mixed volumes.
        std::vector<Lift> lifts;
        for (const PointSet &ps : tuple) {
            RatVec h(ps.size());
            for (std::size_t i = 0; i < h.size(); ++i) h[i] = Rat(long(i % 2));
            lifts.push_back(Lift(ps, std::move(h)));
        }
        MVReport r = khovanskii_mv(lifts);
        if (r.value != mv)
            throw PropertyViolation("subdivision route gives " + r.value.get_str() + ", polarization gives " +
                                    mv.get_str());
        doc.body["subdivision_value"] = emit_int(r.value);
    }
    return doc;
}

Document run_daughter_check(const Flags &, const Json &job) {
    PointSet p = require_points(job);
    auto subsets = require_daughters(job, p.size());
    Polytope hull(p);
    auto faces = enumerate_faces(hull);
    Document doc;
    doc.body["command"] = "daughter-check";
    Json list = Json::array();
    bool all = true;
    for (const auto &s : subsets) {
        DaughterReport rep = check_daughter(hull, faces, s);
        Json e;
        e["indices"] = emit_index_list(s);
        e["accepted"] = rep.accepted;
        Json removed = Json::array();
        for (const Face &f : rep.removed) removed.push_back(emit_face(f));
        e["removed_faces"] = removed;
        if (rep.violation) e["violation"] = *rep.violation;
        all = all && rep.accepted;
        list.push_back(std::move(e));
    }
    doc.body["daughters"] = list;
    doc.body["all_accepted"] = all;
    doc.exit_code = all ? 0 : 1;
    return doc;
}

Document run_semi_check(const Flags &flags, const Json &job) {
    PointSet p = require_points(job);
    DaughterFamily fam = build_family(p, job, flags);
    FaceClassification cls = classify_faces(fam);
    Document doc;
    doc.body["command"] = "semi-check";
    doc.body["semi_interlaced"] = cls.semi;
    if (cls.semi) {
        Json sutures = Json::array();
        for (const Face &s : cls.sutures) sutures.push_back(emit_face(s));
        doc.body["sutures"] = sutures;
    } else {
        doc.body["violation"] = emit_face(*cls.violation);
        doc.exit_code = 1;
    }
    return doc;
}

Document run_sutures(const Flags &flags, const Json &job) {
    PointSet p = require_points(job);
    DaughterFamily fam = build_family(p, job, flags);
    SutureTable t = suture_system(fam, flags.check);
    Document doc;
    doc.body["command"] = "sutures";
    doc.body.update(emit_table(t));
    return doc;
}

Document run_voff(const Flags &flags, const Json &job) {
    PointSet p = require_points(job);
    ConeSpec cone = parse_cone(job, p.dim);
    VoffResult r = voff(p, cone, route_of(flags));
    Document doc;
    doc.body["command"] = "voff";
    doc.body["voff"] = emit_int(r.value);
    doc.body["degenerate"] = r.degenerate;
    Json touched = Json::array();
    for (bool b : r.facet_touched) touched.push_back(b);
    doc.body["facet_touched"] = touched;
    if (r.oracle_value) doc.body["oracle"] = emit_int(*r.oracle_value);
    if (r.table) doc.body["sutures"] = emit_table(*r.table)["sutures"];
    return doc;
}

Document run_newton(const Flags &flags, const Json &job) {
    PointSet p = require_points(job);
    NewtonResult r = newton_number(p, flags.check);
    Document doc;
    doc.body["command"] = "newton";
    doc.body["newton_number"] = emit_int(r.nu);
    doc.body["check_applicable"] = r.check_applicable;
    if (r.voff_value) doc.body["voff"] = emit_int(*r.voff_value);
    return doc;
}

Document run_bk_detect(const Flags &, const Json &job) {
    PointSet p = require_points(job);
    auto hit = detect_stretched_bk(p);
    Document doc;
    doc.body["command"] = "bk-detect";
    doc.body["found"] = hit.has_value();
    if (hit) {
        doc.body["k"] = hit->k;
        doc.body["coordinates"] = emit_one_based(hit->coords);
        doc.body["stretch"] = emit_vec(hit->stretch);
        Json blocks = Json::array();
        for (const auto &block : hit->blocks) {
            Json b = Json::array();
            for (const auto &pt : block) b.push_back(emit_vec(pt));
            blocks.push_back(std::move(b));
        }
        doc.body["blocks"] = blocks;
    }
    return doc;
}

Document run_degree(const std::string &command, const Flags &flags, const Json &job) {
    Document doc;
    doc.body["command"] = command;
    DegreeResult r;
    if (command == "mldeg") {
        CayleyInput in = parse_blocks(job);
        const Json &params = field(job, "params", "job");
        IntVec u = get_vector(field(params, "u", "job.params"), in.block_dim, "job.params.u");
        r = ml_degree(in, u, route_of(flags));
    } else if (command == "eddeg") {
        r = ed_degree(parse_blocks(job), route_of(flags));
    } else {
        PointSet support = require_points(job);
        const Json &params = field(job, "params", "job");
        Int d = get_int(field(params, "d", "job.params"), "job.params.d");
        r = polar_degree(support, d, route_of(flags));
    }
    doc.body["degree"] = emit_int(r.value);
    doc.body["degenerate"] = r.degenerate;
    if (r.oracle_value) doc.body["oracle"] = emit_int(*r.oracle_value);
    return doc;
}

Document run_mult(const Flags &, const Json &job) {
    PointSet p = require_points(job);
    Document doc;
    doc.body["command"] = "mult";
    Json orbits = Json::array();
    const Json *params = optional_field(job, "params");
    const Json *faces = params ? optional_field(*params, "faces") : nullptr;
    if (faces) {
        if (!faces->is_array() || faces->empty()) fail("job.params.faces", "expected a nonempty array of index lists");
        bool smooth = true;
        for (std::size_t i = 0; i < faces->size(); ++i) {
            auto idx = get_indices((*faces)[i], p.size(), "job.params.faces[" + std::to_string(i) + "]");
            OrbitMultiplicity o = orbit_multiplicity(p, idx);
            Json e;
            e["face"] = emit_index_list(o.face);
            e["dim"] = o.face_dim;
            e["multiplicity"] = emit_int(o.multiplicity);
            e["smooth"] = o.smooth_along_orbit;
            smooth = smooth && o.smooth_along_orbit;
            orbits.push_back(std::move(e));
        }
        doc.body["orbits"] = orbits;
        doc.body["all_smooth"] = smooth;
    } else {
        ToricReport rep = toric_orbit_report(p);
        for (const auto &o : rep.orbits) {
            Json e;
            e["face"] = emit_index_list(o.face);
            e["dim"] = o.face_dim;
            e["multiplicity"] = emit_int(o.multiplicity);
            e["smooth"] = o.smooth_along_orbit;
            orbits.push_back(std::move(e));
        }
        doc.body["orbits"] = orbits;
        doc.body["all_smooth"] = rep.smooth;
    }
    return doc;
}

Document run_verify_lemma(const Flags &flags, const Json &job) {
    PointSet p = require_points(job);
    DaughterFamily fam = build_family(p, job, flags);
    SutureTable t = suture_system(fam);
    Document doc;
    doc.body["command"] = "verify-lemma";
    Json list = Json::array();
    bool all = true;
    for (const Face &s : t.sutures) {
        LemmaReport rep = verify_main_lemma(fam, s);
        Json e;
        e["suture"] = emit_index_list(s.point_indices);
        e["dim"] = s.dim;
        e["trivial"] = rep.trivial;
        e["directions_checked"] = rep.checks.size();
        e["holds"] = rep.all_hold;
        if (!rep.all_hold) {
            Json failures = Json::array();
            for (const auto &c : rep.checks)
                if (!c.equation_holds || !c.corollary_holds) {
                    Json f;
                    f["xi"] = emit_rat_vec(c.xi);
                    f["lhs"] = emit_int(c.lhs);
                    f["rhs"] = emit_int(c.rhs);
                    failures.push_back(std::move(f));
                }
            e["failures"] = failures;
        }
        all = all && rep.all_hold;
        list.push_back(std::move(e));
    }
    doc.body["sutures"] = list;
    doc.body["all_hold"] = all;
    doc.exit_code = all ? 0 : 1;
    return doc;
}

const std::map<std::string, Document (*)(const Flags &, const Json &)> &dispatch_table() {
    static const std::map<std::string, Document (*)(const Flags &, const Json &)> table{
        {"volume", run_volume},
        {"mixed-volume", run_mixed_volume},
        {"daughter-check", run_daughter_check},
        {"semi-check", run_semi_check},
        {"sutures", run_sutures},
        {"voff", run_voff},
        {"newton", run_newton},
        {"bk-detect", run_bk_detect},
        {"mult", run_mult},
        {"verify-lemma", run_verify_lemma},
    };
    return table;
}

void render_value(const Json &v, const std::string &prefix, std::ostringstream &out) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it)
            render_value(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (v.is_array() && !v.empty() && (v[0].is_object() || v[0].is_array())) {
        for (std::size_t i = 0; i < v.size(); ++i) render_value(v[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << ": " << v.dump() << "\n";
    }
}

}  // namespace

Json parse_job_text(const std::string &text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InvalidInput("job file is not valid JSON");
    if (!j.is_object()) throw InvalidInput("job: expected a JSON object");
    return j;
}

Document run(const std::string &command, const Flags &flags, const Json &job) {
    if (command == "mldeg" || command == "eddeg" || command == "pdeg") return run_degree(command, flags, job);
    auto it = dispatch_table().find(command);
    if (it == dispatch_table().end()) throw InvalidInput("unknown command '" + command + "'");
    return it->second(flags, job);
}

std::string render_text(const Json &body) {
    std::ostringstream out;
    render_value(body, "", out);
    return out.str();
}

const std::vector<std::string> &commands() {
    static const std::vector<std::string> names{"volume", "mixed-volume", "daughter-check", "semi-check",
                                                "sutures", "voff",         "newton",        "bk-detect",
                                                "mldeg",  "eddeg",        "pdeg",          "mult",
                                                "verify-lemma"};
    return names;
}

}  // namespace mixvol::jobio
