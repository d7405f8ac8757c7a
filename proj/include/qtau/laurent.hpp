#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtau/numeric.hpp"

namespace qtau {

// Laurent polynomial in q^{1/(2D)} with integer coefficients.  Exponents are
// stored as integers in 1/(2D)-of-a-q-power units, i.e. the stored pair
// (e, c) means the term c * q^{e/(2D)}.
class LaurentHalf {
public:
    LaurentHalf() : two_d_(2) {}
    explicit LaurentHalf(long two_d) : two_d_(two_d) {}

    static LaurentHalf zero(long two_d) { return LaurentHalf(two_d); }
    static LaurentHalf one(long two_d) {
        LaurentHalf p(two_d);
        p.terms_[0] = 1;
        return p;
    }
    // c * q^{e/(2D)}
    static LaurentHalf monomial(long two_d, long e, Int c = Int(1)) {
        LaurentHalf p(two_d);
        if (c != 0) p.terms_[e] = std::move(c);
        return p;
    }

    long two_d() const { return two_d_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<long, Int>& terms() const { return terms_; }

    bool operator==(const LaurentHalf& o) const {
        return two_d_ == o.two_d_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentHalf& o) const { return !(*this == o); }

    LaurentHalf operator-() const;
    LaurentHalf operator+(const LaurentHalf& o) const;
    LaurentHalf operator-(const LaurentHalf& o) const;
    LaurentHalf operator*(const LaurentHalf& o) const;
    LaurentHalf& operator+=(const LaurentHalf& o) { return *this = *this + o; }
    LaurentHalf& operator-=(const LaurentHalf& o) { return *this = *this - o; }
    LaurentHalf& operator*=(const LaurentHalf& o) { return *this = *this * o; }

    LaurentHalf scaled(const Int& c) const;
    // multiply by q^{e/(2D)}
    LaurentHalf shifted(long e) const;
    // q -> q^{-1}
    LaurentHalf mirrored() const;

    // Exact division; throws check_error if the division leaves a remainder
    // (signals a bug in a caller relying on an exact identity).
    LaurentHalf divided_exact(const LaurentHalf& den, const char* context) const;

    long min_exponent() const;
    long max_exponent() const;

    // True if every exponent is divisible by 2D, i.e. the value lies in Z[q^{±1}].
    bool has_integer_q_powers() const;

    // All exponents congruent to a single residue class mod 2D (the
    // fractional-power structure asserted by the integrality theorem).
    // Returns that residue through `res`; zero polynomial matches anything.
    bool single_residue_mod_2d(long& res) const;

    // Coefficients of q^{e/(2D)} |-> exp(e h / (2D)) as a power series in h
    // up to order `order` (inclusive).
    std::vector<Rat> exp_h_expansion(int order) const;

    std::string to_string() const;

private:
    long two_d_;
    std::map<long, Int> terms_; // exponent (1/2D units) -> nonzero coefficient

    void strip_zero(long key) {
        auto it = terms_.find(key);
        if (it != terms_.end() && it->second == 0) terms_.erase(it);
    }
    friend LaurentHalf q_int_monomial(long two_d, long n);
};

// Quantum integer [n] = (q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2}).
LaurentHalf quantum_integer(long two_d, long n);

// q^{n/2} - q^{-n/2}
LaurentHalf q_sinh(long two_d, long n);

} // namespace qtau
