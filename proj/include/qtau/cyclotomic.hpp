#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qtau/laurent.hpp"
#include "qtau/numeric.hpp"

namespace qtau {

// The field Q(zeta_m) realised as Q[x]/Phi_m(x).  The generator x is the
// "abstract" primitive m-th root; computations pick a root zeta = x^a with
// gcd(a, m) = 1 at evaluation time.
class CycField {
public:
    static std::shared_ptr<const CycField> make(long m);

    long m() const { return m_; }
    int degree() const { return deg_; }
    const std::vector<Int>& phi() const { return phi_; }

    // x^j reduced mod Phi_m, any j (taken mod m).
    const std::vector<Rat>& power_basis(long j) const { return xpow_[mod_nonneg(j, m_)]; }

private:
    explicit CycField(long m);
    long m_;
    int deg_;
    std::vector<Int> phi_;                // monic, degree deg_
    std::vector<std::vector<Rat>> xpow_;  // x^j mod Phi, j in [0, m)
};

using FieldPtr = std::shared_ptr<const CycField>;

// Integer coefficients of the m-th cyclotomic polynomial (monic, ascending).
std::vector<Int> cyclotomic_polynomial(long m);

// An element of Q(zeta_m) in the power basis 1, x, ..., x^{deg-1}.
class CycNum {
public:
    CycNum() = default;
    explicit CycNum(FieldPtr f) : field_(std::move(f)), c_(field_->degree(), Rat(0)) {}
    CycNum(FieldPtr f, std::vector<Rat> coeffs);

    static CycNum from_rational(FieldPtr f, const Rat& v);
    // zeta^e for zeta = x^a: the monomial x^{(a e) mod m}.
    static CycNum root_power(FieldPtr f, long a, long e);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool operator==(const CycNum& o) const;
    bool operator!=(const CycNum& o) const { return !(*this == o); }

    CycNum operator-() const;
    CycNum operator+(const CycNum& o) const;
    CycNum operator-(const CycNum& o) const;
    CycNum operator*(const CycNum& o) const;
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    CycNum scaled(const Rat& v) const;
    CycNum inverse() const;                 // throws on zero
    CycNum operator/(const CycNum& o) const { return *this * o.inverse(); }
    CycNum pow(long n) const;               // integer exponent, negative allowed

    // Galois map x -> x^t, gcd(t, m) = 1.  conj() is t = -1 (complex conjugation).
    CycNum galois(long t) const;
    CycNum conj() const { return galois(field_->m() - 1); }

    // Coefficients of the same element rewritten in powers of x^e (e coprime
    // to m): value = sum_k out[k] (x^e)^k.
    std::vector<Rat> rebase_coeffs(long e) const;

    // True iff every power-basis coefficient is an integer; fills `coeffs`.
    bool integer_coeffs(std::vector<Int>* coeffs = nullptr) const;

    // Floating approximation at x = exp(2*pi*i/m) (display only).
    std::pair<double, double> approx() const;

    std::string to_string() const;

private:
    FieldPtr field_;
    std::vector<Rat> c_;
};

// (xi - 1)-adic valuation in Z[xi] for prime m; input must have integer
// coefficients.  Returns nullopt for the zero element (valuation infinity).
std::optional<long> valuation_at_xi_minus_1(const CycNum& x);

// Evaluate q^{1/2D} -> x^a in Q[x]/Phi_m, m = 2*D*r style fields.
CycNum evaluate(const LaurentHalf& p, const FieldPtr& f, long a);

// Evaluate q -> x^a directly (field order m coprime to nothing in
// particular); requires every exponent of p divisible by 2D.
CycNum evaluate_integer_q(const LaurentHalf& p, const FieldPtr& f, long a);

// Embed a value from Q[y]/Phi_{m'} into Q[x]/Phi_m (m' | m) by the ring
// homomorphism sending the root y^{a_small} to x^{e_big}.  x^{e_big} must
// have exact order m'.
CycNum embed_root_value(const CycNum& v, long a_small, const FieldPtr& big, long e_big);

} // namespace qtau
