#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "qtau/errors.hpp"

namespace qtau {

using Int = mpz_class;
using Rat = mpq_class;

inline long mod_nonneg(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { long t = a % b; a = b; b = t; }
    return a;
}

inline long pow_mod(long base, long exp, long m) {
    long r = 1 % m;
    base = mod_nonneg(base, m);
    while (exp > 0) {
        if (exp & 1) r = (r * base) % m;
        base = (base * base) % m;
        exp >>= 1;
    }
    return r;
}

// Inverse of a mod m; requires gcd(a, m) = 1.
inline long inv_mod(long a, long m) {
    long t = 0, newt = 1, r = m, newr = mod_nonneg(a, m);
    while (newr != 0) {
        long q = r / newr;
        long tmp = t - q * newt; t = newt; newt = tmp;
        tmp = r - q * newr; r = newr; newr = tmp;
    }
    if (r != 1)
        throw invalid_input_error("inv_mod: " + std::to_string(a) +
                                  " not invertible mod " + std::to_string(m));
    return mod_nonneg(t, m);
}

inline bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw invalid_input_error("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

// Residue of a rational mod prime r; the denominator must be coprime to r.
inline long rat_mod_prime(const Rat& q, long r) {
    Int num = q.get_num(), den = q.get_den();
    Int rr(r);
    Int dm = den % rr;
    if (dm < 0) dm += rr;
    if (dm == 0)
        throw invalid_input_error("rational has denominator divisible by " + std::to_string(r));
    long d = dm.get_si();
    Int nm = num % rr;
    if (nm < 0) nm += rr;
    long n = nm.get_si();
    return (n * inv_mod(d, r)) % r;
}

} // namespace qtau
