#include "mixvol/mixed_volume.hpp"

#include <algorithm>
#include <map>

namespace mixvol {

namespace {

void validate_tuple(const std::vector<PointSet> &ps) {
    const std::size_t n = ps.size();
    for (const auto &p : ps) {
        if (p.empty()) throw InvalidInput("mixed volume: empty point set argument");
        if (p.dim != n) throw InvalidInput("mixed volume: need exactly n sets of ambient dimension n");
    }
}

std::size_t sum_rank(const std::vector<PointSet> &ps, const std::vector<std::size_t> &subset) {
    std::vector<IntVec> diffs;
    for (std::size_t i : subset)
        for (std::size_t j = 1; j < ps[i].size(); ++j) diffs.push_back(vec_sub(ps[i].points[j], ps[i].points[0]));
    if (diffs.empty()) return 0;
    return rank(IntMatrix::from_rows(diffs));
}

PointSet reduce(const PointSet &p) { return p.size() > p.dim + 1 ? hull_vertices(p) : p; }

}  // namespace

Int mixed_volume(const std::vector<PointSet> &ps) {
    const std::size_t n = ps.size();
    if (n == 0) return 1;  // empty tuple in the 0-dimensional space
    validate_tuple(ps);

    std::vector<PointSet> red;
    red.reserve(n);
    for (const auto &p : ps) red.push_back(reduce(p));

    // Subset sums share structure: sum(mask) = sum(mask \ lowbit) + P_lowbit.
    std::vector<std::optional<PointSet>> sums(std::size_t(1) << n);
    Int total = 0;
    for (std::size_t mask = 1; mask < sums.size(); ++mask) {
        std::size_t low = 0;
        while (!(mask & (std::size_t(1) << low))) ++low;
        std::size_t rest = mask & (mask - 1);
        if (rest == 0)
            sums[mask] = red[low];
        else
            sums[mask] = minkowski_sum(*sums[rest], red[low]);
        unsigned bits = 0;
        for (std::size_t m = mask; m; m &= m - 1) ++bits;
        Int vol = lattice_volume(*sums[mask], n);
        total += ((n - bits) % 2 == 0) ? vol : -vol;
    }
    return exact_div(total, factorial(static_cast<unsigned>(n)));
}

std::optional<std::vector<std::size_t>> mv_zero_witness(const std::vector<PointSet> &ps) {
    const std::size_t n = ps.size();
    validate_tuple(ps);
    for (std::size_t size = 1; size <= n; ++size) {
        std::vector<std::size_t> subset(size);
        for (std::size_t i = 0; i < size; ++i) subset[i] = i;
        for (;;) {
            if (sum_rank(ps, subset) < size) return subset;
            // next combination in lexicographic order
            std::size_t i = size;
            while (i > 0 && subset[i - 1] == n - size + i - 1) --i;
            if (i == 0) break;
            ++subset[i - 1];
            for (std::size_t j = i; j < size; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    return std::nullopt;
}

Int mv_split(const std::vector<PointSet> &ps, std::size_t k) {
    const std::size_t n = ps.size();
    validate_tuple(ps);
    if (k == 0 || k > n) throw InvalidInput("mv_split: k out of range");

    std::vector<IntVec> union_pts;
    for (std::size_t i = 0; i < k; ++i)
        for (const auto &p : ps[i].points) union_pts.push_back(p);
    std::size_t jr = affine_rank(union_pts);
    if (jr > k) throw InvalidInput("mv_split: the first k sets span more than k dimensions");
    if (jr < k) return 0;  // their Minkowski sum is degenerate inside any such Q

    AffineChart chart(union_pts);
    std::vector<PointSet> inner;
    inner.reserve(k);
    for (std::size_t i = 0; i < k; ++i) inner.push_back(chart.to_local(ps[i]));
    Int inner_mv = mixed_volume(inner);

    if (k == n) return inner_mv;

    QuotientMap pi = quotient_projection(union_pts, n);
    std::vector<PointSet> outer;
    outer.reserve(n - k);
    for (std::size_t i = k; i < n; ++i) outer.push_back(pi.apply(ps[i]));
    return inner_mv * mixed_volume(outer);
}

Lift::Lift(PointSet b, RatVec h) : base(std::move(b)), heights(std::move(h)) {
    if (base.empty()) throw InvalidInput("lift over an empty set");
    if (heights.size() != base.size()) throw InvalidInput("lift: one height per base point required");
}

Lift Lift::flat(PointSet b) {
    RatVec h(b.size(), Rat(0));
    return Lift(std::move(b), std::move(h));
}

PointSet regular_cell(const Lift &lift, const RatVec &xi) {
    if (xi.size() != lift.base.dim) throw InvalidInput("regular cell: covector dimension mismatch");
    std::vector<Rat> values(lift.base.size());
    for (std::size_t i = 0; i < lift.base.size(); ++i) {
        Rat v = lift.heights[i];
        for (std::size_t j = 0; j < xi.size(); ++j) v += xi[j] * Rat(lift.base.points[i][j]);
        values[i] = v;
    }
    Rat best = values[0];
    for (const Rat &v : values)
        if (v > best) best = v;
    std::vector<IntVec> cell;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] == best) cell.push_back(lift.base.points[i]);
    return PointSet(lift.base.dim, std::move(cell));
}

PointSet lifted_points(const Lift &lift, const Int &height_scale) {
    const std::size_t n = lift.base.dim;
    std::vector<IntVec> pts;
    pts.reserve(2 * lift.base.size());
    for (std::size_t i = 0; i < lift.base.size(); ++i) {
        Rat scaled = lift.heights[i] * Rat(height_scale);
        if (scaled.get_den() != 1) throw InternalError("lifted_points: scale does not clear denominators");
        IntVec p = lift.base.points[i];
        p.push_back(scaled.get_num());
        pts.push_back(p);
        IntVec q = pts.back();
        q[n] -= 1;
        pts.push_back(std::move(q));
    }
    return PointSet(n + 1, std::move(pts));
}

PointSet minkowski_fold(const std::vector<PointSet> &summands) {
    if (summands.empty()) throw InvalidInput("Minkowski fold of nothing");
    PointSet acc = reduce(summands[0]);
    for (std::size_t i = 1; i < summands.size(); ++i) {
        acc = minkowski_sum(acc, reduce(summands[i]));
        if (acc.size() > 600) acc = hull_vertices(acc);
    }
    return acc;
}

UpperDirections upper_hull_directions(const std::vector<PointSet> &lifted_summands) {
    PointSet sum = minkowski_fold(lifted_summands);
    Polytope hull(sum);
    const std::size_t last = sum.dim - 1;

    UpperDirections out;
    std::vector<std::size_t> upper_or_side;  // facet indices with nonnegative last normal coordinate
    for (std::size_t fi = 0; fi < hull.facets().size(); ++fi) {
        const Facet &f = hull.facets()[fi];
        if (f.normal[last] > 0) {
            RatVec xi(last);
            for (std::size_t j = 0; j < last; ++j) xi[j] = make_rat(f.normal[j], f.normal[last]);
            out.facet_dirs.push_back(std::move(xi));
            upper_or_side.push_back(fi);
        } else if (f.normal[last] == 0) {
            upper_or_side.push_back(fi);
        }
    }

    for (std::size_t v : hull.vertices()) {
        IntVec w(sum.dim, Int(0));
        bool has_upper = false;
        for (std::size_t fi : upper_or_side) {
            const Facet &f = hull.facets()[fi];
            if (!std::binary_search(f.tight.begin(), f.tight.end(), v)) continue;
            w = vec_add(w, f.normal);
            if (f.normal[last] > 0) has_upper = true;
        }
        if (!has_upper) continue;
        RatVec xi(last);
        for (std::size_t j = 0; j < last; ++j) xi[j] = make_rat(w[j], w[last]);
        out.vertex_dirs.push_back(std::move(xi));
    }
    return out;
}

MVReport khovanskii_mv(const std::vector<Lift> &lifts) {
    const std::size_t n = lifts.size();
    if (n == 0) return MVReport{Int(1), {}};
    for (const auto &l : lifts)
        if (l.base.dim != n) throw InvalidInput("khovanskii: need n lifts over ambient dimension n");

    {
        std::vector<PointSet> bases;
        bases.reserve(n);
        for (const auto &l : lifts) bases.push_back(l.base);
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        if (sum_rank(bases, all) < n) return MVReport{Int(0), {}};  // every term vanishes
    }

    Int scale = 1;
    for (const auto &l : lifts)
        for (const Rat &h : l.heights) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), h.get_den_mpz_t());

    std::vector<PointSet> lifted;
    lifted.reserve(n);
    for (const auto &l : lifts) lifted.push_back(lifted_points(l, scale));

    MVReport report;
    for (RatVec xi_scaled : upper_hull_directions(lifted).facet_dirs) {
        KhovanskiiTerm term;
        term.xi.resize(n);
        for (std::size_t j = 0; j < n; ++j) term.xi[j] = xi_scaled[j] / Rat(scale);
        term.cells.reserve(n);
        for (const auto &l : lifts) term.cells.push_back(regular_cell(l, term.xi));
        term.value = mixed_volume(term.cells);
        report.value += term.value;
        report.per_xi.push_back(std::move(term));
    }
    std::sort(report.per_xi.begin(), report.per_xi.end(),
              [](const KhovanskiiTerm &a, const KhovanskiiTerm &b) { return a.xi < b.xi; });
    return report;
}

}  // namespace mixvol
