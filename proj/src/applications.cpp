#include "mixvol/applications.hpp"

#include <algorithm>
#include <set>

namespace mixvol {

ConeSpec ConeSpec::orthant(std::size_t n) {
    ConeSpec c;
    c.ambient_dim = n;
    for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n, Int(0));
        e[i] = 1;
        c.functionals.push_back(std::move(e));
    }
    return c;
}

void ConeSpec::validate() const {
    if (ambient_dim == 0) throw InvalidInput("cone: ambient dimension must be positive");
    if (functionals.size() > ambient_dim) throw InvalidInput("cone: more facets than the dimension allows");
    for (const auto &f : functionals) {
        if (f.size() != ambient_dim) throw InvalidInput("cone: functional length mismatch");
        Int g = 0;
        for (const Int &x : f) g = gcd(g, x);
        if (g == 0) throw InvalidInput("cone: zero functional");
        if (g != 1) throw InvalidInput("cone: functional is not primitive");
    }
    if (!functionals.empty() && rank(IntMatrix::from_rows(functionals)) != functionals.size())
        throw InvalidInput("cone: facet functionals are not linearly independent");
}

AffineCone AffineCone::from(const ConeSpec &cone) {
    cone.validate();
    return AffineCone{cone.ambient_dim, cone.functionals, IntVec(cone.functionals.size(), Int(0))};
}

OffCoordinateFamily off_coordinate_family(const PointSet &p, const AffineCone &cone) {
    if (p.empty()) throw InvalidInput("off-coordinate family of an empty set");
    if (p.dim != cone.ambient_dim) throw InvalidInput("off-coordinate family: cone dimension mismatch");
    const std::size_t n = p.dim, m = cone.functionals.size();
    if (m > n) throw InvalidInput("off-coordinate family: more cone facets than coordinates");

    std::vector<bool> touched(m, false);
    std::vector<std::vector<std::size_t>> daughters;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::size_t> d;
        for (std::size_t pi = 0; pi < p.size(); ++pi) {
            Int v = dot(cone.functionals[i], p.points[pi]);
            if (v < cone.offsets[i]) throw InvalidInput("point " + std::to_string(pi) + " violates the cone");
            if (v > cone.offsets[i])
                d.push_back(pi);
            else
                touched[i] = true;
        }
        if (d.empty())
            throw InvalidInput("off-coordinate polytope " + std::to_string(i + 1) +
                               " is empty: every point lies on the cone facet");
        daughters.push_back(std::move(d));
    }
    std::vector<std::size_t> all(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) all[i] = i;
    for (std::size_t i = m; i < n; ++i) daughters.push_back(all);

    return OffCoordinateFamily{DaughterFamily(p, std::move(daughters)), std::move(touched)};
}

OffCoordinateFamily off_coordinate_family(const PointSet &p, const ConeSpec &cone) {
    return off_coordinate_family(p, AffineCone::from(cone));
}

VoffResult voff(const PointSet &p, const AffineCone &cone, VoffRoute route) {
    OffCoordinateFamily fam = off_coordinate_family(p, cone);
    VoffResult out;
    out.facet_touched = fam.facet_touched;

    if (fam.family.hull().dim() < p.dim) {
        // Everything lives in a lower-dimensional subspace, so the mixed
        // volume vanishes by the degeneracy criterion.
        out.degenerate = true;
        std::vector<PointSet> ds;
        for (std::size_t i = 0; i < fam.family.count(); ++i) ds.push_back(fam.family.daughter_points(i));
        out.value = mixed_volume(ds);
        if (out.value != 0) throw InternalError("degenerate configuration with nonzero mixed volume");
        if (route != VoffRoute::Formula) out.oracle_value = out.value;
        return out;
    }

    if (route == VoffRoute::Oracle) {
        std::vector<PointSet> ds;
        for (std::size_t i = 0; i < fam.family.count(); ++i) ds.push_back(fam.family.daughter_points(i));
        out.value = mixed_volume(ds);
        out.oracle_value = out.value;
        return out;
    }

    SutureTable table = suture_system(fam.family, route == VoffRoute::Check);
    out.value = table.mixed_volume_of_family();
    if (table.vdag_direct) out.oracle_value = table.vdag_direct->back();
    out.table = std::move(table);
    return out;
}

VoffResult voff(const PointSet &p, const ConeSpec &cone, VoffRoute route) {
    return voff(p, AffineCone::from(cone), route);
}

bool is_v_face(const Face &f, const PointSet &p, const AffineCone &cone) {
    std::size_t on_all = 0;
    for (std::size_t i = 0; i < cone.functionals.size(); ++i) {
        bool tight = true;
        for (std::size_t pi : f.point_indices)
            if (dot(cone.functionals[i], p.points[pi]) != cone.offsets[i]) {
                tight = false;
                break;
            }
        if (tight) ++on_all;
    }
    return on_all + f.dim >= p.dim;
}

NewtonResult newton_number(const PointSet &p, bool check) {
    if (p.empty()) throw InvalidInput("Newton number of an empty set");
    const std::size_t n = p.dim;
    for (const auto &pt : p.points)
        for (const Int &x : pt)
            if (x < 0) throw InvalidInput("polytope is not convenient: it leaves the nonnegative orthant");
    Polytope hull(p);
    IntVec origin(n, Int(0));
    if (!hull.contains(origin)) throw InvalidInput("polytope is not convenient: origin missing");
    for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n, Int(0));
        e[i] = 1;
        if (!hull.contains(e))
            throw InvalidInput("polytope is not convenient: basis vector " + std::to_string(i + 1) + " missing");
    }

    NewtonResult out;
    // Coordinate subspaces are faces of the convenient polytope, cut out by
    // minimizing the complementary coordinates.
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        unsigned bits = 0;
        for (std::size_t m = mask; m; m &= m - 1) ++bits;
        Int term;
        if (mask == 0) {
            term = 1;  // the origin, with its 0-dimensional volume
        } else {
            IntVec xi(n, Int(0));
            for (std::size_t i = 0; i < n; ++i)
                if (!(mask & (std::size_t(1) << i))) xi[i] = -1;
            Face f = support_face(p, xi);
            if (f.dim != bits) throw InternalError("coordinate-subspace slice has the wrong dimension");
            term = lattice_volume(p.subset(f.point_indices));
        }
        out.nu += ((n - bits) % 2 == 0) ? term : -term;
    }

    bool simplex_present = p.contains(origin);
    for (std::size_t i = 0; i < n && simplex_present; ++i) {
        IntVec e(n, Int(0));
        e[i] = 1;
        simplex_present = p.contains(e);
    }
    out.check_applicable = simplex_present;
    if (check && simplex_present) {
        out.voff_value = voff(p, ConeSpec::orthant(n)).value;
        if (*out.voff_value != out.nu)
            throw PropertyViolation("Newton number " + out.nu.get_str() + " disagrees with the off-coordinate mixed volume " +
                                    out.voff_value->get_str());
    }
    return out;
}

std::optional<BkDecomposition> detect_stretched_bk(const PointSet &p) {
    if (p.empty()) throw InvalidInput("decomposition search on an empty set");
    const std::size_t n = p.dim;
    for (const auto &pt : p.points)
        for (const Int &x : pt)
            if (x < 0) throw InvalidInput("set leaves the nonnegative orthant");

    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> coords(k);
        for (std::size_t i = 0; i < k; ++i) coords[i] = i;
        for (;;) {
            // Try the current coordinate subset.
            bool ok = true;
            IntVec stretch(k, Int(0));
            std::vector<std::vector<IntVec>> blocks(k + 1);
            for (const auto &pt : p.points) {
                std::size_t hot = k;  // index into coords with a nonzero entry
                for (std::size_t c = 0; c < k && ok; ++c)
                    if (pt[coords[c]] != 0) {
                        if (hot != k) ok = false;  // two chosen coordinates are nonzero
                        hot = c;
                    }
                if (!ok) break;
                IntVec rest;
                rest.reserve(n - k);
                for (std::size_t j = 0; j < n; ++j)
                    if (std::find(coords.begin(), coords.end(), j) == coords.end()) rest.push_back(pt[j]);
                if (hot == k) {
                    blocks[0].push_back(std::move(rest));
                } else {
                    const Int &level = pt[coords[hot]];
                    if (stretch[hot] == 0)
                        stretch[hot] = level;
                    else if (stretch[hot] != level)
                        ok = false;  // mixed levels on one coordinate
                    if (ok) blocks[hot + 1].push_back(std::move(rest));
                }
                if (!ok) break;
            }
            if (ok)
                for (std::size_t c = 0; c <= k && ok; ++c)
                    if (blocks[c].empty()) ok = false;
            if (ok && affine_rank(blocks[0]) != n - k) ok = false;
            if (ok) {
                std::vector<IntVec> top_union_diffs;
                for (std::size_t c = 1; c <= k; ++c)
                    for (std::size_t i = 1; i < blocks[c].size(); ++i)
                        top_union_diffs.push_back(vec_sub(blocks[c][i], blocks[c][0]));
                std::size_t sum_dim =
                    top_union_diffs.empty() ? 0 : rank(IntMatrix::from_rows(top_union_diffs));
                if (sum_dim >= k) ok = false;
            }
            if (ok) return BkDecomposition{k, coords, stretch, std::move(blocks)};

            std::size_t i = k;
            while (i > 0 && coords[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++coords[i - 1];
            for (std::size_t j = i; j < k; ++j) coords[j] = coords[j - 1] + 1;
        }
    }
    return std::nullopt;
}

OrbitMultiplicity orbit_multiplicity(const PointSet &p, const std::vector<std::size_t> &face_indices) {
    Polytope hull(p);
    if (hull.dim() != p.dim) throw InvalidInput("orbit multiplicities need a full-dimensional set");
    std::vector<std::size_t> key = face_indices;
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());

    const Face *match = nullptr;
    std::vector<Face> faces = enumerate_faces(hull);
    for (const Face &f : faces)
        if (f.point_indices == key) {
            match = &f;
            break;
        }
    if (!match) throw InvalidInput("the given point subset is not a face of the hull");

    PointSet face_pts = p.subset(key);
    Int ind_face = lattice_index(face_pts);
    Int coeff = c_coefficient(p, face_pts);
    Int ind_all = lattice_index(p);

    Int num = ind_face * coeff;
    if (num <= 0 || !mpz_divisible_p(num.get_mpz_t(), ind_all.get_mpz_t()))
        throw InternalError("orbit multiplicity is not a positive integer");
    OrbitMultiplicity out;
    out.face = key;
    out.face_dim = match->dim;
    out.multiplicity = exact_div(num, ind_all);
    out.smooth_along_orbit = (out.multiplicity == 1);
    return out;
}

ToricReport toric_orbit_report(const PointSet &p) {
    Polytope hull(p);
    if (hull.dim() != p.dim) throw InvalidInput("orbit multiplicities need a full-dimensional set");
    ToricReport out;
    for (const Face &f : enumerate_faces(hull)) {
        out.orbits.push_back(orbit_multiplicity(p, f.point_indices));
        out.smooth = out.smooth && out.orbits.back().smooth_along_orbit;
    }
    return out;
}

PointSet cayley_sum(const std::vector<std::vector<IntVec>> &blocks, std::size_t block_dim) {
    if (blocks.empty()) throw InvalidInput("Cayley sum of no blocks");
    const std::size_t k = blocks.size() - 1;
    std::vector<IntVec> pts;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw InvalidInput("Cayley sum: block " + std::to_string(b) + " is empty");
        for (const auto &q : blocks[b]) {
            if (q.size() != block_dim) throw InvalidInput("Cayley sum: block point dimension mismatch");
            IntVec pt(k, Int(0));
            if (b > 0) pt[b - 1] = 1;
            pt.insert(pt.end(), q.begin(), q.end());
            pts.push_back(std::move(pt));
        }
    }
    return PointSet(k + block_dim, std::move(pts));
}

namespace {

ConeSpec level_orthant(std::size_t levels, std::size_t total_dim) {
    ConeSpec c;
    c.ambient_dim = total_dim;
    for (std::size_t i = 0; i < levels; ++i) {
        IntVec e(total_dim, Int(0));
        e[i] = 1;
        c.functionals.push_back(std::move(e));
    }
    return c;
}

DegreeResult run_voff_degree(const PointSet &config, const AffineCone &cone, VoffRoute route) {
    VoffResult r = voff(config, cone, route);
    return DegreeResult{r.value, r.degenerate, r.oracle_value};
}

void validate_cayley(const CayleyInput &in) {
    if (in.block_dim == 0) throw InvalidInput("Cayley input: block dimension must be positive");
    if (in.supports.empty()) throw InvalidInput("Cayley input: no supports given");
    for (const auto &s : in.supports) {
        if (s.empty()) throw InvalidInput("Cayley input: empty support");
        if (s.dim != in.block_dim) throw InvalidInput("Cayley input: support dimension mismatch");
    }
}

}  // namespace

DegreeResult ml_degree(const CayleyInput &in, const IntVec &u, VoffRoute route) {
    validate_cayley(in);
    if (u.size() != in.block_dim) throw InvalidInput("ML degree: u has the wrong dimension");
    std::vector<std::vector<IntVec>> blocks{{u}};
    for (const auto &s : in.supports) blocks.push_back(s.points);
    PointSet config = cayley_sum(blocks, in.block_dim);
    return run_voff_degree(config, AffineCone::from(level_orthant(in.supports.size(), config.dim)), route);
}

DegreeResult ed_degree(const CayleyInput &in, VoffRoute route) {
    validate_cayley(in);
    IntVec origin(in.block_dim, Int(0));
    for (const auto &s : in.supports) {
        if (!s.contains(origin)) throw InvalidInput("ED degree: every support must contain the origin");
        for (const auto &pt : s.points)
            for (const Int &x : pt)
                if (x < 0) throw InvalidInput("ED degree: supports must lie in the nonnegative orthant");
    }

    std::vector<IntVec> distance_support{origin};
    for (std::size_t j = 0; j < in.block_dim; ++j)
        for (long mult : {1L, 2L}) {
            IntVec e(in.block_dim, Int(0));
            e[j] = mult;
            distance_support.push_back(std::move(e));
        }
    std::vector<std::vector<IntVec>> blocks{distance_support};
    for (const auto &s : in.supports) blocks.push_back(s.points);
    PointSet config = cayley_sum(blocks, in.block_dim);
    // The full orthant, levels and torus coordinates alike: the gradient
    // equations of the distance on the variety are supported off the torus
    // facets, so every coordinate contributes an off-coordinate polytope.
    return run_voff_degree(config, AffineCone::from(ConeSpec::orthant(config.dim)), route);
}

DegreeResult polar_degree(const PointSet &support, const Int &degree, VoffRoute route) {
    if (support.empty()) throw InvalidInput("polar degree of an empty support");
    if (degree < 1) throw InvalidInput("polar degree needs a positive polynomial degree");
    const std::size_t homog = support.dim;  // n + 1 homogeneous coordinates
    if (homog < 2) throw InvalidInput("polar degree needs at least two homogeneous coordinates");
    for (const auto &pt : support.points) {
        Int s = 0;
        for (const Int &x : pt) {
            if (x < 0) throw InvalidInput("support point outside the degree simplex");
            s += x;
        }
        if (s != degree) throw InvalidInput("support point of the wrong total degree");
    }

    // The support at level 0, the simplex vertex set at level 1, inside the
    // affine hull {sum(x) + (degree-1) t = degree}.
    std::vector<IntVec> config_pts;
    for (const auto &pt : support.points) {
        IntVec q = pt;
        q.push_back(Int(0));
        config_pts.push_back(std::move(q));
    }
    for (std::size_t i = 0; i < homog; ++i) {
        IntVec q(homog + 1, Int(0));
        q[i] = 1;
        q[homog] = 1;
        config_pts.push_back(std::move(q));
    }

    AffineChart chart(config_pts);
    if (chart.local_dim() != homog) throw InternalError("polar-degree configuration has unexpected dimension");
    std::vector<IntVec> local_pts;
    for (const auto &q : config_pts) local_pts.push_back(chart.to_local(q));
    PointSet config(homog, std::move(local_pts));

    // Cone facets x_i >= 0 restricted to the affine hull become affine
    // functionals in the chart coordinates.
    AffineCone cone;
    cone.ambient_dim = homog;
    for (std::size_t i = 0; i < homog; ++i) {
        IntVec ambient(homog + 1, Int(0));
        ambient[i] = 1;
        IntVec row(homog);
        for (std::size_t j = 0; j < homog; ++j) {
            IntVec local_dir(homog, Int(0));
            local_dir[j] = 1;
            row[j] = chart.to_global(local_dir)[i] - chart.base_point()[i];
        }
        Int off = -chart.base_point()[i];
        Int g = 0;
        for (const Int &x : row) g = gcd(g, x);
        g = gcd(g, off);
        if (g > 1) {
            for (Int &x : row) x = exact_div(x, g);
            off = exact_div(off, g);
        }
        cone.functionals.push_back(std::move(row));
        cone.offsets.push_back(off);
    }
    return run_voff_degree(config, cone, route);
}

}  // namespace mixvol
