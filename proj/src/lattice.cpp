#include "mixvol/lattice.hpp"

namespace mixvol {

namespace {

IntMatrix difference_matrix(const std::vector<IntVec> &points) {
    std::vector<IntVec> cols;
    cols.reserve(points.size() > 0 ? points.size() - 1 : 0);
    for (std::size_t i = 1; i < points.size(); ++i) cols.push_back(vec_sub(points[i], points[0]));
    if (cols.empty()) return IntMatrix(points.empty() ? 0 : points[0].size(), 0);
    return IntMatrix::from_cols(cols);
}

}  // namespace

AffineChart::AffineChart(const std::vector<IntVec> &points) {
    if (points.empty()) throw InvalidInput("affine chart of an empty point set");
    ambient_dim_ = points[0].size();
    base_ = points[0];
    SmithDecomposition s = smith_decompose(difference_matrix(points));
    rank_ = s.rank;
    u_ = std::move(s.u);
    invariants_.resize(rank_);
    for (std::size_t i = 0; i < rank_; ++i) invariants_[i] = s.d.at(i, i);
    IntMatrix uinv = inverse_unimodular(u_);
    basis_ = IntMatrix(ambient_dim_, rank_);
    for (std::size_t i = 0; i < ambient_dim_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) basis_.at(i, j) = uinv.at(i, j);
}

IntVec AffineChart::to_local(const IntVec &ambient) const {
    if (ambient.size() != ambient_dim_) throw InvalidInput("chart: ambient dimension mismatch");
    IntVec shifted = vec_sub(ambient, base_);
    IntVec full = u_.apply(shifted);
    for (std::size_t i = rank_; i < ambient_dim_; ++i)
        if (full[i] != 0) throw InvalidInput("chart: point lies outside the affine span");
    full.resize(rank_);
    return full;
}

IntVec AffineChart::to_global(const IntVec &local) const {
    if (local.size() != rank_) throw InvalidInput("chart: local dimension mismatch");
    IntVec p = base_;
    IntVec bt = basis_.apply(local);
    for (std::size_t i = 0; i < ambient_dim_; ++i) p[i] += bt[i];
    return p;
}

PointSet AffineChart::to_local(const PointSet &ps) const {
    std::vector<IntVec> pts;
    pts.reserve(ps.size());
    for (const auto &p : ps.points) pts.push_back(to_local(p));
    return PointSet(rank_, std::move(pts));
}

IntVec AffineChart::lift_covector(const IntVec &local_covector) const {
    if (local_covector.size() != rank_) throw InvalidInput("chart: covector dimension mismatch");
    IntVec out(ambient_dim_, Int(0));
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < ambient_dim_; ++j) out[j] += local_covector[i] * u_.at(i, j);
    return out;
}

std::vector<std::pair<IntVec, Int>> AffineChart::span_equations() const {
    std::vector<std::pair<IntVec, Int>> eqs;
    for (std::size_t i = rank_; i < ambient_dim_; ++i) {
        IntVec a = u_.row(i);
        eqs.emplace_back(a, dot(a, base_));
    }
    return eqs;
}

Int lattice_index(const PointSet &ps) {
    if (ps.empty()) throw InvalidInput("lattice index of an empty set");
    AffineChart chart(ps.points);
    Int idx = 1;
    for (const Int &d : chart.invariants()) idx *= d;
    return idx;
}

IntVec QuotientMap::apply(const IntVec &p) const {
    IntVec r = map.apply(p);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += offset[i];
    return r;
}

PointSet QuotientMap::apply(const PointSet &ps) const {
    if (target_dim == 0) throw InvalidInput("quotient image in dimension 0 is not a point set");
    std::vector<IntVec> pts;
    pts.reserve(ps.size());
    for (const auto &p : ps.points) pts.push_back(apply(p));
    return PointSet(target_dim, std::move(pts));
}

std::vector<IntVec> QuotientMap::apply_all(const std::vector<IntVec> &pts) const {
    std::vector<IntVec> out;
    out.reserve(pts.size());
    for (const auto &p : pts) out.push_back(apply(p));
    return out;
}

QuotientMap quotient_projection(const std::vector<IntVec> &f_points, std::size_t ambient_dim) {
    if (f_points.empty()) throw InvalidInput("quotient projection of an empty set");
    if (f_points[0].size() != ambient_dim) throw InvalidInput("quotient projection: dimension mismatch");
    SmithDecomposition s = smith_decompose(difference_matrix(f_points));
    const std::size_t r = s.rank, k = ambient_dim - r;

    IntMatrix raw(k, ambient_dim);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j) raw.at(i, j) = s.u.at(r + i, j);

    QuotientMap q;
    q.source_dim = ambient_dim;
    q.target_dim = k;
    q.map = hermite_rows(raw);

    IntMatrix uinv = inverse_unimodular(s.u);
    IntMatrix kb(ambient_dim, r);
    for (std::size_t i = 0; i < ambient_dim; ++i)
        for (std::size_t j = 0; j < r; ++j) kb.at(i, j) = uinv.at(i, j);
    q.kernel_basis = hermite_cols(kb);

    if (r > 0 && !(q.map * q.kernel_basis).is_zero())
        throw InternalError("quotient projection: map does not kill its kernel basis");

    IntVec mp0 = q.map.apply(f_points[0]);
    q.offset.resize(k);
    for (std::size_t i = 0; i < k; ++i) q.offset[i] = -mp0[i];
    return q;
}

QuotientMap quotient_projection(const PointSet &f, std::size_t ambient_dim) {
    return quotient_projection(f.points, ambient_dim);
}

}  // namespace mixvol
