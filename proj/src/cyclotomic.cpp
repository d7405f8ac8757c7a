#include "qtau/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "qtau/errors.hpp"

namespace qtau {

namespace {

// Exact division of integer polynomials, ascending coefficients.
std::vector<Int> poly_div_exact_z(const std::vector<Int>& num, const std::vector<Int>& den) {
    std::vector<Int> n = num;
    long dn = (long)n.size() - 1, dd = (long)den.size() - 1;
    if (dn < dd) throw check_error("cyclotomic division degree underflow");
    std::vector<Int> q(dn - dd + 1);
    for (long k = dn - dd; k >= 0; --k) {
        Int c = n[k + dd] / den[dd];
        if (c * den[dd] != n[k + dd]) throw check_error("cyclotomic division not exact");
        q[k] = c;
        for (long j = 0; j <= dd; ++j) n[k + j] -= c * den[j];
    }
    for (auto& c : n)
        if (c != 0) throw check_error("cyclotomic division remainder");
    return q;
}

} // namespace

std::vector<Int> cyclotomic_polynomial(long m) {
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    if (m < 1) throw invalid_input_error("cyclotomic_polynomial: m >= 1 required");
    std::vector<Int> num(m + 1);
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = poly_div_exact_z(num, cyclotomic_polynomial(d));
    }
    return num;
}

CycField::CycField(long m) : m_(m) {
    phi_ = cyclotomic_polynomial(m);
    deg_ = (int)phi_.size() - 1;
    // x^j mod Phi for j in [0, m)
    xpow_.resize(m_);
    std::vector<Rat> cur(deg_, Rat(0));
    cur[0] = 1;
    for (long j = 0; j < m_; ++j) {
        xpow_[j] = cur;
        // multiply by x
        Rat top = cur[deg_ - 1];
        for (int k = deg_ - 1; k > 0; --k) cur[k] = cur[k - 1];
        cur[0] = 0;
        if (top != 0)
            for (int k = 0; k < deg_; ++k) cur[k] -= top * Rat(phi_[k]);
    }
}

std::shared_ptr<const CycField> CycField::make(long m) {
    static std::map<long, std::shared_ptr<const CycField>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    auto f = std::shared_ptr<const CycField>(new CycField(m));
    cache[m] = f;
    return f;
}

CycNum::CycNum(FieldPtr f, std::vector<Rat> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
    if ((int)c_.size() != field_->degree())
        throw invalid_input_error("CycNum: wrong coefficient count");
}

CycNum CycNum::from_rational(FieldPtr f, const Rat& v) {
    CycNum x(std::move(f));
    x.c_[0] = v;
    return x;
}

CycNum CycNum::root_power(FieldPtr f, long a, long e) {
    if (gcd_long(a, f->m()) != 1)
        throw invalid_input_error("root exponent a not coprime to m");
    long j = mod_nonneg(a * mod_nonneg(e, f->m()), f->m());
    CycNum x(f);
    x.c_ = f->power_basis(j);
    return x;
}

bool CycNum::is_zero() const {
    for (auto& v : c_)
        if (v != 0) return false;
    return true;
}

bool CycNum::operator==(const CycNum& o) const {
    if (field_->m() != o.field_->m()) return false;
    return c_ == o.c_;
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

CycNum CycNum::operator+(const CycNum& o) const {
    if (field_->m() != o.field_->m()) throw invalid_input_error("CycNum: field mismatch");
    CycNum r = *this;
    for (int i = 0; i < (int)c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

CycNum CycNum::operator-(const CycNum& o) const {
    if (field_->m() != o.field_->m()) throw invalid_input_error("CycNum: field mismatch");
    CycNum r = *this;
    for (int i = 0; i < (int)c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

CycNum CycNum::operator*(const CycNum& o) const {
    if (field_->m() != o.field_->m()) throw invalid_input_error("CycNum: field mismatch");
    int d = field_->degree();
    std::vector<Rat> conv(2 * d - 1, Rat(0));
    for (int i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (o.c_[j] == 0) continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    CycNum r(field_);
    for (int k = 0; k < d; ++k) r.c_[k] = conv[k];
    for (int k = d; k < 2 * d - 1; ++k) {
        if (conv[k] == 0) continue;
        const auto& red = field_->power_basis(k); // k < 2d-1 <= m for m >= 2
        for (int i = 0; i < d; ++i) r.c_[i] += conv[k] * red[i];
    }
    return r;
}

CycNum CycNum::scaled(const Rat& v) const {
    CycNum r = *this;
    for (auto& x : r.c_) x *= v;
    return r;
}

namespace {
// polynomials over Q, ascending; used only for the extended Euclid in inverse()
using QP = std::vector<Rat>;
int qp_deg(const QP& p) {
    for (int i = (int)p.size() - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}
QP qp_sub_scaled(QP a, const QP& b, const Rat& s, int shift) {
    if ((int)a.size() < (int)b.size() + shift) a.resize(b.size() + shift, Rat(0));
    for (int i = 0; i < (int)b.size(); ++i) a[i + shift] -= s * b[i];
    return a;
}
} // namespace

CycNum CycNum::inverse() const {
    if (is_zero()) throw invalid_input_error("CycNum: division by zero");
    // extended Euclid: u*this + v*Phi = gcd = nonzero rational
    QP r0(field_->phi().size());
    for (size_t i = 0; i < field_->phi().size(); ++i) r0[i] = Rat(field_->phi()[i]);
    QP r1 = c_;
    QP u0(1, Rat(0)), u1(1, Rat(1)); // coefficients of `this` along the way
    while (true) {
        int d1 = qp_deg(r1);
        if (d1 < 0) throw check_error("CycNum: inverse hit zero remainder (Phi not coprime?)");
        if (d1 == 0) {
            // r1 = constant = u1 * this + (..)*Phi, so this^{-1} = u1 / r1
            Rat inv_c = Rat(1) / r1[0];
            CycNum out(field_);
            for (int i = 0; i < (int)u1.size(); ++i) {
                if (u1[i] == 0) continue;
                const auto& pb = field_->power_basis(mod_nonneg(i, field_->m()));
                for (int k = 0; k < field_->degree(); ++k) out.c_[k] += u1[i] * inv_c * pb[k];
            }
            return out;
        }
        int d0 = qp_deg(r0);
        if (d0 < d1) { std::swap(r0, r1); std::swap(u0, u1); continue; }
        Rat s = r0[d0] / r1[d1];
        r0 = qp_sub_scaled(r0, r1, s, d0 - d1);
        u0 = qp_sub_scaled(u0, u1, s, d0 - d1);
        if (qp_deg(r0) < qp_deg(r1)) { std::swap(r0, r1); std::swap(u0, u1); }
    }
}

CycNum CycNum::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    CycNum r = from_rational(field_, Rat(1));
    CycNum b = *this;
    while (n > 0) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

CycNum CycNum::galois(long t) const {
    long m = field_->m();
    if (gcd_long(t, m) != 1) throw invalid_input_error("galois exponent not coprime to m");
    CycNum r(field_);
    for (int j = 0; j < field_->degree(); ++j) {
        if (c_[j] == 0) continue;
        const auto& pb = field_->power_basis(mod_nonneg(j * t, m));
        for (int k = 0; k < field_->degree(); ++k) r.c_[k] += c_[j] * pb[k];
    }
    return r;
}

std::vector<Rat> CycNum::rebase_coeffs(long e) const {
    long m = field_->m();
    long estar = inv_mod(e, m);
    CycNum g = galois(estar);
    return g.coeffs();
}

bool CycNum::integer_coeffs(std::vector<Int>* coeffs) const {
    if (coeffs) coeffs->clear();
    for (auto& v : c_) {
        if (v.get_den() != 1) return false;
        if (coeffs) coeffs->push_back(v.get_num());
    }
    return true;
}

std::pair<double, double> CycNum::approx() const {
    long m = field_->m();
    double re = 0, im = 0;
    for (int j = 0; j < field_->degree(); ++j) {
        if (c_[j] == 0) continue;
        double v = c_[j].get_d();
        double ang = 2.0 * M_PI * (double)j / (double)m;
        re += v * std::cos(ang);
        im += v * std::sin(ang);
    }
    return {re, im};
}

std::string CycNum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j < field_->degree(); ++j) {
        if (c_[j] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[j].get_str() << ")";
        if (j > 0) os << "*z^" << j;
    }
    if (first) os << "0";
    return os.str();
}

std::optional<long> valuation_at_xi_minus_1(const CycNum& x) {
    const auto& f = x.field();
    long r = f->m();
    if (!is_prime_long(r)) throw invalid_input_error("valuation needs prime field order");
    std::vector<Int> ic;
    if (!x.integer_coeffs(&ic)) throw invalid_input_error("valuation needs integral element");
    if (x.is_zero()) return std::nullopt;

    CycNum xi_minus_1 = CycNum::root_power(f, 1, 1) - CycNum::from_rational(f, Rat(1));
    CycNum inv = xi_minus_1.inverse();
    CycNum cur = x;
    long v = 0;
    while (true) {
        // residue mod (xi - 1): evaluate at xi = 1, i.e. sum of coefficients, mod r
        Int s(0);
        for (auto& c : cur.coeffs()) s += c.get_num();
        if (s % r != 0) return v;
        cur = cur * inv;
        std::vector<Int> tmp;
        if (!cur.integer_coeffs(&tmp))
            throw check_error("valuation: exact division by (xi-1) failed");
        ++v;
        if (v > 4 * r * (long)f->degree())
            throw check_error("valuation: runaway loop");
    }
}

CycNum evaluate(const LaurentHalf& p, const FieldPtr& f, long a) {
    CycNum out(f);
    for (auto& [e, c] : p.terms()) {
        CycNum t = CycNum::root_power(f, a, e);
        out += t.scaled(Rat(c));
    }
    return out;
}

CycNum evaluate_integer_q(const LaurentHalf& p, const FieldPtr& f, long a) {
    CycNum out(f);
    long two_d = p.two_d();
    for (auto& [e, c] : p.terms()) {
        if (mod_nonneg(e, two_d) != 0)
            throw invalid_input_error("evaluate_integer_q: fractional q-power present");
        CycNum t = CycNum::root_power(f, a, e / two_d);
        out += t.scaled(Rat(c));
    }
    return out;
}

CycNum embed_root_value(const CycNum& v, long a_small, const FieldPtr& big, long e_big) {
    long ms = v.field()->m(), mb = big->m();
    if (mb % ms != 0) throw invalid_input_error("embed_root_value: m' must divide m");
    long w = mod_nonneg(e_big * inv_mod(a_small, ms), mb);
    if (mb / gcd_long(w, mb) != ms)
        throw invalid_input_error("embed_root_value: target root has wrong order");
    std::vector<Rat> acc(big->degree(), Rat(0));
    for (int j = 0; j < v.field()->degree(); ++j) {
        if (v.coeffs()[j] == 0) continue;
        const auto& pb = big->power_basis(mod_nonneg(w * j, mb));
        for (int k = 0; k < big->degree(); ++k) acc[k] += v.coeffs()[j] * pb[k];
    }
    return CycNum(big, std::move(acc));
}

} // namespace qtau
