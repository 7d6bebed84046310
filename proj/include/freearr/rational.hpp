#pragma once

// Exact scalar arithmetic on top of GMP. Rational is always kept in
// lowest terms with a positive denominator (mpq canonical form).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace freearr {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& n) { return n.get_str(); }

using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& n) { return sgn(n); }

// gcd of all entries, nonnegative; 0 for the zero vector
inline Integer content(const IntVec& v) {
    Integer g = 0;
    for (const Integer& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Scale a rational vector to the unique integer vector with coprime
// entries whose first nonzero entry is positive. Zero vector maps to zero.
inline IntVec primitive_integer(const RatVec& v) {
    Integer den_lcm = 1;
    for (const Rational& q : v)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    IntVec w(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        w[i] = v[i].get_num() * (den_lcm / v[i].get_den());
    Integer g = content(w);
    if (g == 0) return w;
    int s = 0;
    for (const Integer& x : w) {
        if (x != 0) { s = sign(x); break; }
    }
    if (s < 0) g = -g;
    for (Integer& x : w) x /= g;
    return w;
}

inline IntVec primitive_integer(const IntVec& v) {
    RatVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    return primitive_integer(r);
}

inline bool is_zero_vec(const IntVec& v) {
    for (const Integer& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace freearr
