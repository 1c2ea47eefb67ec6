#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace mixvol {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Thrown when a caller-supplied value violates an operation's contract.
class InvalidInput : public std::runtime_error {
  public:
    explicit InvalidInput(const std::string &msg) : std::runtime_error(msg) {}
};

/// Thrown when a checked mathematical property fails (e.g. a family is not
/// semi-interlaced, or two computation routes disagree).
class PropertyViolation : public std::runtime_error {
  public:
    explicit PropertyViolation(const std::string &msg) : std::runtime_error(msg) {}
};

/// Thrown when an internal invariant breaks; indicates a bug, not bad input.
class InternalError : public std::logic_error {
  public:
    explicit InternalError(const std::string &msg) : std::logic_error(msg) {}
};

inline Int exact_div(const Int &a, const Int &b) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw InternalError("exact_div: " + a.get_str() + " not divisible by " + b.get_str());
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int gcd(const Int &a, const Int &b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Rat make_rat(const Int &num, const Int &den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int dot(const IntVec &a, const IntVec &b) {
    if (a.size() != b.size()) throw InternalError("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVec vec_sub(const IntVec &a, const IntVec &b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec vec_add(const IntVec &a, const IntVec &b) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// Divides by the gcd of the entries; zero vectors are returned unchanged.
inline void make_primitive(IntVec &v) {
    Int g = 0;
    for (const Int &x : v) g = gcd(g, x);
    if (g > 1)
        for (Int &x : v) x = exact_div(x, g);
}

inline Int parse_int(const std::string &s) {
    if (s.empty()) throw InvalidInput("empty integer string");
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size()) throw InvalidInput("bad integer string '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw InvalidInput("bad integer string '" + s + "'");
    return Int(s);
}

inline Int factorial(unsigned n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace mixvol
