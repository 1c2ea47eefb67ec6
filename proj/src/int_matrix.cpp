#include "mixvol/int_matrix.hpp"

#include <algorithm>

namespace mixvol {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec> &rows) {
    if (rows.empty()) return IntMatrix(0, 0);
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw InternalError("from_rows: ragged input");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_cols(const std::vector<IntVec> &cols) {
    if (cols.empty()) return IntMatrix(0, 0);
    IntMatrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows()) throw InternalError("from_cols: ragged input");
        for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

IntVec IntMatrix::row(std::size_t i) const {
    IntVec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

IntVec IntMatrix::col(std::size_t j) const {
    IntVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix &rhs) const {
    if (cols_ != rhs.rows_) throw InternalError("matrix product: shape mismatch");
    IntMatrix p(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int &aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) p.at(i, j) += aik * rhs.at(k, j);
        }
    return p;
}

IntVec IntMatrix::apply(const IntVec &v) const {
    if (v.size() != cols_) throw InternalError("matrix apply: shape mismatch");
    IntVec r(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::add_row_multiple(std::size_t i, std::size_t j, const Int &k) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) += k * at(j, c);
}

void IntMatrix::add_col_multiple(std::size_t i, std::size_t j, const Int &k) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) += k * at(r, j);
}

bool IntMatrix::is_zero() const {
    for (const Int &x : a_)
        if (x != 0) return false;
    return true;
}

namespace {

// Clears m.at(i, col) using the pivot at (t, col). Plain elimination when the
// pivot divides the entry (keeps row t intact); otherwise the unimodular 2x2
// [[p, q], [-b/g, a/g]] with g = gcd(a, b) = p*a + q*b, which strictly shrinks
// the pivot and so guarantees termination of the caller's sweep.
void row_gcd_step(IntMatrix &m, IntMatrix &u, std::size_t t, std::size_t i, std::size_t col) {
    Int a = m.at(t, col), b = m.at(i, col);
    if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        Int q = exact_div(b, a);
        m.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        return;
    }
    Int g, p, q;
    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int alpha = exact_div(a, g), beta = exact_div(b, g);
    for (std::size_t c = 0; c < m.cols(); ++c) {
        Int mt = m.at(t, c), mi = m.at(i, c);
        m.at(t, c) = p * mt + q * mi;
        m.at(i, c) = alpha * mi - beta * mt;
    }
    for (std::size_t c = 0; c < u.cols(); ++c) {
        Int ut = u.at(t, c), ui = u.at(i, c);
        u.at(t, c) = p * ut + q * ui;
        u.at(i, c) = alpha * ui - beta * ut;
    }
}

void col_gcd_step(IntMatrix &m, IntMatrix &v, std::size_t t, std::size_t j, std::size_t row) {
    Int a = m.at(row, t), b = m.at(row, j);
    if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        Int q = exact_div(b, a);
        m.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        return;
    }
    Int g, p, q;
    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int alpha = exact_div(a, g), beta = exact_div(b, g);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Int mt = m.at(r, t), mj = m.at(r, j);
        m.at(r, t) = p * mt + q * mj;
        m.at(r, j) = alpha * mj - beta * mt;
    }
    for (std::size_t r = 0; r < v.rows(); ++r) {
        Int vt = v.at(r, t), vj = v.at(r, j);
        v.at(r, t) = p * vt + q * vj;
        v.at(r, j) = alpha * vj - beta * vt;
    }
}

}  // namespace

SmithDecomposition smith_decompose(const IntMatrix &m) {
    const std::size_t r = m.rows(), c = m.cols();
    SmithDecomposition s;
    s.u = IntMatrix::identity(r);
    s.v = IntMatrix::identity(c);
    s.d = m;
    IntMatrix &a = s.d;

    std::size_t t = 0;
    const std::size_t lim = std::min(r, c);
    while (t < lim) {
        // Pivot: smallest nonzero absolute value in the trailing block.
        std::size_t pi = r, pj = c;
        Int best;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j) {
                if (a.at(i, j) == 0) continue;
                Int v = abs(a.at(i, j));
                if (pi == r || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi == r) break;  // trailing block is zero
        a.swap_rows(t, pi);
        s.u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        s.v.swap_cols(t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < r; ++i)
                if (a.at(i, t) != 0) {
                    row_gcd_step(a, s.u, t, i, t);
                    dirty = true;
                }
            for (std::size_t j = t + 1; j < c; ++j)
                if (a.at(t, j) != 0) {
                    col_gcd_step(a, s.v, t, j, t);
                    dirty = true;
                }
            if (dirty) continue;

            // Pivot must divide the rest of the block.
            bool fixed = true;
            for (std::size_t i = t + 1; i < r && fixed; ++i)
                for (std::size_t j = t + 1; j < c && fixed; ++j)
                    if (!mpz_divisible_p(a.at(i, j).get_mpz_t(), a.at(t, t).get_mpz_t())) {
                        a.add_row_multiple(t, i, 1);
                        s.u.add_row_multiple(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (a.at(t, t) < 0) {
            a.negate_row(t);
            s.u.negate_row(t);
        }
        ++t;
    }
    s.rank = t;
    return s;
}

IntMatrix hermite_rows(const IntMatrix &m) {
    IntMatrix a = m;
    const std::size_t r = a.rows(), c = a.cols();
    std::size_t pr = 0;
    for (std::size_t j = 0; j < c && pr < r; ++j) {
        // Collapse column j below pr into a single positive pivot.
        for (;;) {
            std::size_t best = r;
            for (std::size_t i = pr; i < r; ++i) {
                if (a.at(i, j) == 0) continue;
                if (best == r || abs(a.at(i, j)) < abs(a.at(best, j))) best = i;
            }
            if (best == r) break;  // column clear below pr
            a.swap_rows(pr, best);
            bool others = false;
            for (std::size_t i = pr + 1; i < r; ++i) {
                if (a.at(i, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, j).get_mpz_t(), a.at(pr, j).get_mpz_t());
                a.add_row_multiple(i, pr, -q);
                if (a.at(i, j) != 0) others = true;
            }
            if (!others) {
                if (a.at(pr, j) < 0) a.negate_row(pr);
                for (std::size_t i = 0; i < pr; ++i) {
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), a.at(i, j).get_mpz_t(), a.at(pr, j).get_mpz_t());
                    a.add_row_multiple(i, pr, -q);
                }
                ++pr;
                break;
            }
        }
    }
    return a;
}

IntMatrix hermite_cols(const IntMatrix &m) { return hermite_rows(m.transpose()).transpose(); }

Int determinant(const IntMatrix &m) {
    if (m.rows() != m.cols()) throw InternalError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = exact_div(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

std::size_t rank(const IntMatrix &m) {
    IntMatrix a = m;
    const std::size_t r = a.rows(), c = a.cols();
    std::size_t rk = 0;
    Int prev = 1;
    for (std::size_t col = 0; col < c && rk < r; ++col) {
        std::size_t p = r;
        for (std::size_t i = rk; i < r; ++i)
            if (a.at(i, col) != 0) {
                p = i;
                break;
            }
        if (p == r) continue;
        a.swap_rows(rk, p);
        for (std::size_t i = rk + 1; i < r; ++i)
            for (std::size_t j = col + 1; j < c; ++j)
                a.at(i, j) = exact_div(a.at(i, j) * a.at(rk, col) - a.at(i, col) * a.at(rk, j), prev);
        for (std::size_t i = rk + 1; i < r; ++i) a.at(i, col) = 0;
        prev = a.at(rk, col);
        ++rk;
    }
    return rk;
}

IntMatrix inverse_unimodular(const IntMatrix &m) {
    if (m.rows() != m.cols()) throw InternalError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    // Gauss-Jordan over rationals; entries of the result must come out integral.
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
        a[i][n + i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = n;
        for (std::size_t i = k; i < n; ++i)
            if (a[i][k] != 0) {
                p = i;
                break;
            }
        if (p == n) throw InternalError("inverse_unimodular: singular matrix");
        std::swap(a[k], a[p]);
        Rat piv = a[k][k];
        for (std::size_t j = 0; j < 2 * n; ++j) a[k][j] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rat f = a[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat &x = a[i][n + j];
            if (x.get_den() != 1) throw InternalError("inverse_unimodular: matrix is not unimodular");
            inv.at(i, j) = x.get_num();
        }
    return inv;
}

}  // namespace mixvol
