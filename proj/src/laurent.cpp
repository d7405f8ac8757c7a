#include "qtau/laurent.hpp"

#include <sstream>

#include "qtau/errors.hpp"

namespace qtau {

namespace {
void require_same_scale(const LaurentHalf& a, const LaurentHalf& b) {
    if (a.two_d() != b.two_d())
        throw invalid_input_error("LaurentHalf: mixed denominator scales " +
                                  std::to_string(a.two_d()) + " vs " +
                                  std::to_string(b.two_d()));
}
} // namespace

LaurentHalf LaurentHalf::operator-() const {
    LaurentHalf r(two_d_);
    for (auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentHalf LaurentHalf::operator+(const LaurentHalf& o) const {
    require_same_scale(*this, o);
    LaurentHalf r = *this;
    for (auto& [e, c] : o.terms_) {
        Int& dst = r.terms_[e];
        dst += c;
        if (dst == 0) r.terms_.erase(e);
    }
    return r;
}

LaurentHalf LaurentHalf::operator-(const LaurentHalf& o) const {
    require_same_scale(*this, o);
    LaurentHalf r = *this;
    for (auto& [e, c] : o.terms_) {
        Int& dst = r.terms_[e];
        dst -= c;
        if (dst == 0) r.terms_.erase(e);
    }
    return r;
}

LaurentHalf LaurentHalf::operator*(const LaurentHalf& o) const {
    require_same_scale(*this, o);
    LaurentHalf r(two_d_);
    if (terms_.empty() || o.terms_.empty()) return r;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) {
            Int& dst = r.terms_[e1 + e2];
            dst += c1 * c2;
        }
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = (it->second == 0) ? r.terms_.erase(it) : std::next(it);
    return r;
}

LaurentHalf LaurentHalf::scaled(const Int& c) const {
    LaurentHalf r(two_d_);
    if (c == 0) return r;
    for (auto& [e, v] : terms_) r.terms_[e] = v * c;
    return r;
}

LaurentHalf LaurentHalf::shifted(long e) const {
    LaurentHalf r(two_d_);
    for (auto& [e0, c] : terms_) r.terms_[e0 + e] = c;
    return r;
}

LaurentHalf LaurentHalf::mirrored() const {
    LaurentHalf r(two_d_);
    for (auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

long LaurentHalf::min_exponent() const {
    if (terms_.empty()) throw check_error("min_exponent of zero polynomial");
    return terms_.begin()->first;
}

long LaurentHalf::max_exponent() const {
    if (terms_.empty()) throw check_error("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

bool LaurentHalf::has_integer_q_powers() const {
    for (auto& [e, c] : terms_)
        if (mod_nonneg(e, two_d_) != 0) return false;
    return true;
}

bool LaurentHalf::single_residue_mod_2d(long& res) const {
    if (terms_.empty()) return true;
    res = mod_nonneg(terms_.begin()->first, two_d_);
    for (auto& [e, c] : terms_)
        if (mod_nonneg(e, two_d_) != res) return false;
    return true;
}

LaurentHalf LaurentHalf::divided_exact(const LaurentHalf& den, const char* context) const {
    require_same_scale(*this, den);
    if (den.terms_.empty()) throw check_error(std::string("division by zero in ") + context);
    if (terms_.empty()) return LaurentHalf(two_d_);

    // Work with plain polynomial coefficient arrays after factoring the
    // lowest powers out of numerator and denominator.
    long num_lo = min_exponent(), den_lo = den.min_exponent();
    long num_deg = max_exponent() - num_lo, den_deg = den.max_exponent() - den_lo;
    if (num_deg < den_deg)
        throw check_error(std::string("non-exact Laurent division (degree) in ") + context);

    std::vector<Int> num(num_deg + 1), dv(den_deg + 1);
    for (auto& [e, c] : terms_) num[e - num_lo] = c;
    for (auto& [e, c] : den.terms_) dv[e - den_lo] = c;

    std::vector<Int> quot(num_deg - den_deg + 1);
    const Int& lead = dv[den_deg];
    for (long k = num_deg - den_deg; k >= 0; --k) {
        Int& top = num[k + den_deg];
        if (top == 0) { quot[k] = 0; continue; }
        Int q = top / lead;
        if (q * lead != top)
            throw check_error(std::string("non-exact Laurent division (coefficient) in ") + context);
        quot[k] = q;
        for (long j = 0; j <= den_deg; ++j) num[k + j] -= q * dv[j];
    }
    for (auto& c : num)
        if (c != 0)
            throw check_error(std::string("non-exact Laurent division (remainder) in ") + context);

    LaurentHalf r(two_d_);
    for (long k = 0; k < (long)quot.size(); ++k)
        if (quot[k] != 0) r.terms_[k + num_lo - den_lo] = quot[k];
    return r;
}

std::vector<Rat> LaurentHalf::exp_h_expansion(int order) const {
    std::vector<Rat> out(order + 1, Rat(0));
    for (auto& [e, c] : terms_) {
        // q^{e/2D} = exp(e h / 2D): contributes c * (e/2D)^n / n!
        Rat x = make_rat(e, two_d_);
        Rat pw(1);
        Rat fact(1);
        for (int n = 0; n <= order; ++n) {
            if (n > 0) {
                pw *= x;
                fact *= n;
            }
            out[n] += Rat(c) * pw / fact;
        }
    }
    return out;
}

std::string LaurentHalf::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Int a = abs(c);
        if (e == 0) { os << a.get_str(); continue; }
        if (a != 1) os << a.get_str() << "*";
        os << "q";
        if (e != two_d_) {
            long g = gcd_long(e, two_d_);
            long n = e / g, d = two_d_ / g;
            os << "^(" << n;
            if (d != 1) os << "/" << d;
            os << ")";
        }
    }
    return os.str();
}

LaurentHalf q_sinh(long two_d, long n) {
    // exponent n/2 in 1/(2D) units is n*D = n*two_d/2
    if (two_d % 2 != 0) throw invalid_input_error("q_sinh needs even 2D");
    LaurentHalf p(two_d);
    if (n == 0) return p;
    long e = n * (two_d / 2);
    p += LaurentHalf::monomial(two_d, e);
    p -= LaurentHalf::monomial(two_d, -e);
    return p;
}

LaurentHalf quantum_integer(long two_d, long n) {
    // [n] = q^{(n-1)/2} + q^{(n-3)/2} + ... + q^{-(n-1)/2}, odd [-n] = -[n]
    LaurentHalf p(two_d);
    long s = n < 0 ? -1 : 1;
    long an = n * s;
    long D = two_d / 2;
    for (long k = 0; k < an; ++k) {
        long e = (an - 1 - 2 * k) * D;
        p += LaurentHalf::monomial(two_d, e, Int(s));
    }
    return p;
}

} // namespace qtau
