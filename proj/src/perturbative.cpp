#include "qtau/perturbative.hpp"

#include <algorithm>

#include "qtau/errors.hpp"
#include "qtau/link_engine.hpp"

namespace qtau {

PowerSeries PowerSeries::one(int order) {
    PowerSeries p = zero(order);
    p.c[0] = 1;
    return p;
}

PowerSeries PowerSeries::exp_linear(const Rat& coef, int order) {
    PowerSeries p = zero(order);
    Rat pw(1), fact(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            pw *= coef;
            fact *= n;
        }
        p.c[n] = pw / fact;
    }
    return p;
}

namespace {
void require_same_order(const PowerSeries& a, const PowerSeries& b) {
    if (a.order != b.order) throw invalid_input_error("PowerSeries: order mismatch");
}
} // namespace

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    require_same_order(*this, o);
    PowerSeries p = *this;
    for (int i = 0; i <= order; ++i) p.c[i] += o.c[i];
    return p;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    require_same_order(*this, o);
    PowerSeries p = *this;
    for (int i = 0; i <= order; ++i) p.c[i] -= o.c[i];
    return p;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    require_same_order(*this, o);
    PowerSeries p = zero(order);
    for (int i = 0; i <= order; ++i) {
        if (c[i] == 0) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (o.c[j] == 0) continue;
            p.c[i + j] += c[i] * o.c[j];
        }
    }
    return p;
}

PowerSeries PowerSeries::inverse() const {
    if (c[0] == 0) throw invalid_input_error("PowerSeries: inverse needs nonzero constant term");
    PowerSeries p = zero(order);
    p.c[0] = Rat(1) / c[0];
    for (int n = 1; n <= order; ++n) {
        Rat acc(0);
        for (int k = 1; k <= n; ++k) acc += c[k] * p.c[n - k];
        p.c[n] = -acc / c[0];
    }
    return p;
}

PowerSeries PowerSeries::scaled(const Rat& v) const {
    PowerSeries p = *this;
    for (auto& x : p.c) x *= v;
    return p;
}

PowerSeries one_minus_exp_ratio(const Rat& x, const Rat& y, int order) {
    if (y == 0) throw invalid_input_error("one_minus_exp_ratio: y != 0");
    if (x == 0) return PowerSeries::zero(order);
    // (1 - e^{xh})/(1 - e^{yh}) = (x/y) * [sum_{n>=1} x^{n-1} h^{n-1}/n!] / [same in y]
    auto tail = [&](const Rat& v) {
        PowerSeries p = PowerSeries::zero(order);
        Rat pw(1), fact(1);
        for (int n = 1; n <= order + 1; ++n) {
            fact *= n;
            if (n - 1 <= order) p.c[n - 1] = pw / fact;
            pw *= v;
        }
        return p;
    };
    return (tail(x) * tail(y).inverse()).scaled(x / y);
}

// ---------------------------------------------------------------------------

int legendre(const Int& a, long r) {
    if (!is_prime_long(r) || r == 2) throw invalid_input_error("legendre: odd prime modulus");
    Int m = a % r;
    if (m < 0) m += r;
    if (m == 0) return 0;
    long t = pow_mod(m.get_si(), (r - 1) / 2, r);
    return t == r - 1 ? -1 : 1;
}

PrimeExpansion prime_expand(const CycNum& value, long r, long a_xi, int order) {
    if (!is_prime_long(r) || r == 2) throw invalid_input_error("prime_expand: odd prime r");
    if (value.field()->m() != r) throw invalid_input_error("prime_expand: field order must be r");
    if (order >= r - 1)
        throw invalid_input_error("prime_expand: order must be < r-1, got " +
                                  std::to_string(order));
    // rewrite in powers of the evaluation root xi = x^{a_xi}
    std::vector<Rat> in_xi = a_xi == 1 ? value.coeffs() : value.rebase_coeffs(a_xi);
    std::vector<Int> f;
    f.reserve(in_xi.size());
    for (auto& v : in_xi) {
        if (v.get_den() != 1)
            throw invalid_input_error("prime_expand: value is not in Z[xi]");
        f.push_back(v.get_num());
    }
    PrimeExpansion out;
    out.r = r;
    out.representative_degree = (long)f.size() - 1;
    out.coefficients.assign(order + 1, Rat(0));
    Rat fact(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) fact *= n;
        Rat acc(0);
        for (size_t k = 0; k < f.size(); ++k) {
            if (f[k] == 0) continue;
            Int kn(1);
            for (int t = 0; t < n; ++t) kn *= (long)k;
            acc += Rat(f[k] * kn) / fact;
        }
        out.coefficients[n] = acc;
        out.residues.push_back(rat_mod_prime(acc, r));
    }
    return out;
}

OhtsukiSeries ohtsuki_lens(const RootSystem& rs, long b, int order) {
    if (b == 0) throw invalid_input_error("ohtsuki_lens: b != 0");
    long sn = b > 0 ? 1 : -1;
    Rat rho2 = rs.inner(rs.rho(), rs.rho());
    PowerSeries t = PowerSeries::exp_linear(Rat(sn - b) * rho2 / 2, order);
    for (long k = 0; k < rs.s(); ++k) {
        long ra = rs.rho_pair((int)k);
        t = t * one_minus_exp_ratio(make_rat(-ra, b), Rat(-sn * ra), order);
    }
    return OhtsukiSeries{t, SeriesProvenance::LensClosedForm};
}

// ---------------------------------------------------------------------------
// sl2 knot expansion: evaluate Q_{K^0}(N) = [N] J_K(N) at N = 2..(2 n_int + 4),
// expand q = e^h, and interpolate exact polynomials in N per hbar order.
// ---------------------------------------------------------------------------

namespace {

std::vector<Rat> interpolate(const std::vector<long>& xs, const std::vector<Rat>& ys) {
    // Newton form, then expand to monomial coefficients.
    int n = (int)xs.size();
    std::vector<Rat> divided = ys;
    for (int level = 1; level < n; ++level)
        for (int i = n - 1; i >= level; --i)
            divided[i] = (divided[i] - divided[i - 1]) / Rat(xs[i] - xs[i - level]);
    std::vector<Rat> poly(n, Rat(0)); // monomial coefficients
    std::vector<Rat> basis(n, Rat(0));
    basis[0] = 1; // running prod (x - x_0)...(x - x_{k-1})
    int basis_deg = 0;
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i <= basis_deg; ++i) poly[i] += divided[k] * basis[i];
        if (k + 1 == n) break;
        // basis *= (x - xs[k])
        for (int i = basis_deg + 1; i >= 1; --i) basis[i] = basis[i - 1] - Rat(xs[k]) * basis[i];
        basis[0] = -Rat(xs[k]) * basis[0];
        ++basis_deg;
    }
    return poly;
}

LaurentHalf q_knot_0framed(KnotKind knot, long N) {
    switch (knot) {
        case KnotKind::TrefoilRight:
            return jones_trefoil(N, Chirality::Right) * quantum_integer(4, N);
        case KnotKind::TrefoilLeft:
            return jones_trefoil(N, Chirality::Left) * quantum_integer(4, N);
        case KnotKind::FigureEight:
            return jones_fig8(N) * quantum_integer(4, N);
    }
    throw invalid_input_error("bad knot kind");
}

Rat double_factorial_odd(long j) { // (2j-1)!!
    Rat v(1);
    for (long t = 1; t <= j; ++t) v *= (2 * t - 1);
    return v;
}

} // namespace

std::vector<std::vector<Rat>> sl2_knot_expansion(KnotKind knot, int order) {
    int points = 2 * order + 5; // N = 2 .. 2*order+6, enough to pin degree <= order+2
    std::vector<long> xs;
    std::vector<std::vector<Rat>> vals; // per point: h-expansion
    for (int p = 0; p < points; ++p) {
        long N = 2 + p;
        xs.push_back(N);
        vals.push_back(q_knot_0framed(knot, N).exp_h_expansion(order));
    }
    std::vector<std::vector<Rat>> coeffs(order + 1);
    for (int n = 0; n <= order; ++n) {
        std::vector<Rat> ys(points);
        for (int p = 0; p < points; ++p) ys[p] = vals[p][n];
        std::vector<Rat> poly = interpolate(xs, ys);
        // degree bound n+2 from framing 0; only even powers of N
        for (int j = n + 3; j < (int)poly.size(); ++j)
            if (poly[j] != 0)
                throw check_error("sl2 knot expansion: N-degree bound n+2 violated at order " +
                                  std::to_string(n));
        for (int j = 1; j < (int)poly.size(); j += 2)
            if (poly[j] != 0)
                throw check_error("sl2 knot expansion: odd N-power detected at order " +
                                  std::to_string(n));
        poly.resize(n + 3, Rat(0));
        coeffs[n] = poly;
    }
    return coeffs;
}

OhtsukiSeries ohtsuki_knot_sl2(KnotKind knot, int framing, int order) {
    if (framing != 1 && framing != -1)
        throw invalid_input_error("ohtsuki_knot_sl2: framing must be +1 or -1");
    int n_int = 2 * order + 2;
    auto coeffs = sl2_knot_expansion(knot, n_int);
    // substitution N^{2j} -> framing^j (-2)^j (2j-1)!! h^{-j}; sum into S with
    // offset index so S_{-1} is representable, then multiply by
    // z = (1 - e^{framing h})/2.
    std::vector<Rat> S(n_int + 2, Rat(0)); // S[m+1] = coefficient of h^m, m >= -1
    for (int n = 0; n <= n_int; ++n)
        for (int j2 = 0; j2 < (int)coeffs[n].size(); j2 += 2) {
            if (coeffs[n][j2] == 0) continue;
            long j = j2 / 2;
            if (j == 0) {
                // constant in N: the paper's expansion has no such terms
                throw check_error("ohtsuki_knot_sl2: N^0 term present at order " +
                                  std::to_string(n));
            }
            long m = n - j;
            if (m < -1) throw check_error("ohtsuki_knot_sl2: h-power below -1");
            Rat sub = double_factorial_odd(j);
            Rat pw(1);
            for (long tt = 0; tt < j; ++tt) pw *= Rat(-2 * framing);
            sub *= pw;
            S[m + 1] += coeffs[n][j2] * sub;
        }
    // multiply by z = (1 - e^{eps h})/2 = -eps h/2 (1 + ...)
    PowerSeries z = PowerSeries::one(order + 1) - PowerSeries::exp_linear(Rat(framing), order + 1);
    z = z.scaled(make_rat(1, 2));
    if (z.c[0] != 0) throw check_error("z must vanish at h^0");
    PowerSeries t = PowerSeries::zero(order);
    for (int m = -1; m <= n_int; ++m) {
        if (S[m + 1] == 0) continue;
        for (int k = 1; k <= order + 1; ++k) {
            int target = m + k;
            if (target >= 0 && target <= order) t.c[target] += S[m + 1] * z.c[k];
        }
    }
    return OhtsukiSeries{t, SeriesProvenance::KnotSl2};
}

namespace {

PowerSeries z_factor(const RootSystem& rs, long b, int order) {
    long sn = b > 0 ? 1 : -1;
    Rat rho2 = rs.inner(rs.rho(), rs.rho());
    PowerSeries z = PowerSeries::exp_linear(rho2 * Rat(sn - b) / 2, order);
    PowerSeries one = PowerSeries::one(order);
    for (long k = 0; k < rs.s(); ++k) {
        long ra = rs.rho_pair((int)k);
        z = z * (one - PowerSeries::exp_linear(Rat(sn * ra), order));
    }
    return z.scaled(Rat(1) / Rat(rs.weyl_order()));
}

} // namespace

OhtsukiSeries ohtsuki_diag_link(const RootSystem& rs, const std::vector<ExpansionTerm>& terms,
                                const std::vector<long>& framings, int order) {
    int m = (int)framings.size();
    for (long b : framings)
        if (b == 0) throw invalid_input_error("ohtsuki_diag_link: framings must be nonzero");
    // working order must absorb the h^{-sum j} shifts plus the m z-factors
    int work = 2 * order + 2 * m + 2;
    std::vector<Rat> S(work + m + 1, Rat(0)); // S[idx] = coeff of h^{idx - m}
    long two_s = rs.dim_g() - rs.rank();
    for (const auto& term : terms) {
        if ((int)term.beta_powers.size() != m)
            throw invalid_input_error("expansion term arity does not match component count");
        long jsum = 0;
        Rat factor = term.coeff;
        bool drop = false;
        for (int i = 0; i < m; ++i) {
            long j = term.beta_powers[i].second;
            if (j < 0 || j > term.n + two_s)
                throw invalid_input_error("expansion term violates the degree constraint");
            if (j % 2 == 1) { drop = true; break; } // odd beta-powers map to 0
            long jh = j / 2;
            jsum += jh;
            const Weight& beta = term.beta_powers[i].first;
            if (!rs.in_Y(beta))
                throw invalid_input_error("expansion term beta must lie in the root lattice");
            Rat b2 = rs.inner(beta, beta);
            Rat pw(1);
            for (long tN = 0; tN < jh; ++tN) pw *= -b2 / Rat(framings[i]);
            factor *= double_factorial_odd(jh) * pw;
        }
        if (drop) continue;
        long idx = term.n - jsum + m;
        if (idx < 0) throw check_error("ohtsuki_diag_link: h-power below -m");
        if (idx < (long)S.size()) S[idx] += factor;
    }
    PowerSeries zprod = PowerSeries::one(work);
    for (int i = 0; i < m; ++i) zprod = zprod * z_factor(rs, framings[i], work);
    // full product on the shifted index range h^{-m} .. h^{order}; negative
    // powers must cancel exactly (the paper's restrictions guarantee it).
    std::vector<Rat> full(order + m + 1, Rat(0)); // full[p] = coeff of h^{p-m}
    for (long idx = 0; idx < (long)S.size(); ++idx) {
        if (S[idx] == 0) continue;
        for (int k = 0; k <= work; ++k) {
            if (zprod.c[k] == 0) continue;
            long p = idx + k; // h-power plus m
            if (p <= order + m) full[p] += S[idx] * zprod.c[k];
        }
    }
    for (int p = 0; p < m; ++p)
        if (full[p] != 0) throw check_error("ohtsuki_diag_link: residual negative h-power");
    PowerSeries t = PowerSeries::zero(order);
    for (int q = 0; q <= order; ++q) t.c[q] = full[q + m];
    return OhtsukiSeries{t, SeriesProvenance::DiagonalLink};
}

OhtsukiSeries ohtsuki_knot_general(const RootSystem& rs, const std::vector<ExpansionTerm>& terms,
                                   int framing, int order) {
    if (framing != 1 && framing != -1)
        throw invalid_input_error("ohtsuki_knot_general: framing must be +1 or -1");
    long two_s = rs.dim_g() - rs.rank();
    for (const auto& t : terms) {
        if (t.beta_powers.size() != 1)
            throw invalid_input_error("ohtsuki_knot_general: single-component terms expected");
        long j = t.beta_powers[0].second;
        if (j % 2 == 0 && t.coeff != 0 && (j < two_s || j > t.n + two_s))
            throw invalid_input_error("ohtsuki_knot_general: degree constraint violated");
    }
    OhtsukiSeries s = ohtsuki_diag_link(rs, terms, {framing}, order);
    s.provenance = SeriesProvenance::KnotGeneral;
    return s;
}

OhtsukiSeries compose_series(const OhtsukiSeries& m_prime,
                             const std::vector<OhtsukiSeries>& lens_factors) {
    PowerSeries t = m_prime.t;
    for (const auto& f : lens_factors) {
        if (f.t.c[0] == 0)
            throw invalid_input_error("compose_series: non-invertible lens factor");
        t = t * f.t.inverse();
    }
    return OhtsukiSeries{t, SeriesProvenance::Composition};
}

bool congruence_check(const OhtsukiSeries& series, const ManifoldSpec& spec, const RootSystem& rs,
                      long r, int n_max, long a_xi, const Limits& lim) {
    if (!is_prime_long(r) || r == 2) throw invalid_input_error("congruence_check: odd prime r");
    if (n_max >= r - 1) throw invalid_input_error("congruence_check: n_max < r-1 required");
    if (n_max > series.t.order) throw invalid_input_error("congruence_check: series too short");
    Int h1 = spec.homology_order();
    if (h1 == 0) throw invalid_input_error("congruence_check: rational homology sphere required");
    if (r <= std::max(h1.get_si(), rs.dim_g() - rs.rank()))
        throw invalid_input_error("congruence_check: r must exceed max(|H1|, dim g - l)");

    InvariantResult t = tau(spec, rs, r, a_xi, Flavor::Projective, lim);
    if (!t.defined) return false;
    PrimeExpansion pe = prime_expand(t.value, r, a_xi, n_max);

    int leg = legendre(h1, r);
    long lpow = 1;
    for (int i = 0; i < rs.rank(); ++i) lpow *= leg;
    for (int n = 0; n <= n_max; ++n) {
        Rat rhs = series.t.c[n] * Rat(lpow);
        Int den = rhs.get_den();
        if (den % r == 0) return false; // denominator collision, congruence meaningless
        long rhs_mod = rat_mod_prime(rhs, r);
        if (pe.residues[n] != rhs_mod) return false;
    }
    return true;
}

} // namespace qtau
