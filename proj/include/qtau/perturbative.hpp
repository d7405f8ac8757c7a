#pragma once

#include <string>
#include <vector>

#include "qtau/cyclotomic.hpp"
#include "qtau/manifold.hpp"
#include "qtau/root_system.hpp"

namespace qtau {

// Truncated power series in hbar with exact rational coefficients c[0..order].
struct PowerSeries {
    int order = 0;
    std::vector<Rat> c;

    static PowerSeries zero(int order) { return {order, std::vector<Rat>(order + 1, Rat(0))}; }
    static PowerSeries one(int order);
    static PowerSeries exp_linear(const Rat& coef, int order); // exp(coef * h)

    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator*(const PowerSeries& o) const;
    PowerSeries inverse() const; // needs c[0] != 0
    PowerSeries scaled(const Rat& v) const;
    bool operator==(const PowerSeries& o) const { return order == o.order && c == o.c; }
};

// (1 - e^{x h}) / (1 - e^{y h}) as a power series, x rational, y != 0.
PowerSeries one_minus_exp_ratio(const Rat& x, const Rat& y, int order);

enum class SeriesProvenance { LensClosedForm, KnotSl2, KnotGeneral, DiagonalLink, Composition };

struct OhtsukiSeries {
    PowerSeries t;
    SeriesProvenance provenance;
};

struct PrimeExpansion {
    long r = 0;
    std::vector<long> residues;    // c_{r,n} mod r for n = 0..order
    std::vector<Rat> coefficients; // exact c_{r,n}
    long representative_degree = 0;
};

// Lift tau^{Pg}(xi) in Z[xi] (computed with xi = x^{a_xi}) to f(q) in Z[q],
// substitute q = e^h, truncate at `order` < r-1 and reduce mod r.
PrimeExpansion prime_expand(const CycNum& value, long r, long a_xi, int order);

// Lens-space series: surgery on the unknot with framing b != 0.
OhtsukiSeries ohtsuki_lens(const RootSystem& rs, long b, int order);

enum class KnotKind { TrefoilRight, TrefoilLeft, FigureEight };

// sl2 knot surgery with framing +-1, via the even-N-power substitution rule.
OhtsukiSeries ohtsuki_knot_sl2(KnotKind knot, int framing, int order);

// One term of a Q_{K^0} expansion: coeff * prod_i (beta_i | mu_i)^{j_i} * h^n.
struct ExpansionTerm {
    std::vector<std::pair<Weight, long>> beta_powers; // (beta in Y, exponent j), one per component
    long n;
    Rat coeff;
};

// General algebra, one knot component, framing +-1.
OhtsukiSeries ohtsuki_knot_general(const RootSystem& rs, const std::vector<ExpansionTerm>& terms,
                                   int framing, int order);

// Diagonal linking matrix with framings b_i != 0.
OhtsukiSeries ohtsuki_diag_link(const RootSystem& rs, const std::vector<ExpansionTerm>& terms,
                                const std::vector<long>& framings, int order);

// t_M = t_{M'} / (t_{M_1} ... t_{M_l})
OhtsukiSeries compose_series(const OhtsukiSeries& m_prime,
                             const std::vector<OhtsukiSeries>& lens_factors);

// Even-power expansion data of Q_{K^0}(N) for the sl2 knots: polynomial
// coefficients per hbar order (used by the diagonal-link route and tests).
// coeffs[n][j] is the coefficient of N^j h^n, j <= n + 2.
std::vector<std::vector<Rat>> sl2_knot_expansion(KnotKind knot, int order);

// c_{r,n} = (|H1|/r)^l c_n (mod r) for n <= n_max, against the projective tau.
bool congruence_check(const OhtsukiSeries& series, const ManifoldSpec& spec, const RootSystem& rs,
                      long r, int n_max, long a_xi = 1, const Limits& lim = Limits{});

int legendre(const Int& a, long r);

} // namespace qtau
