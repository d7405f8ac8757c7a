#include "qtau/manifold.hpp"

#include <map>
#include <mutex>

#include "qtau/errors.hpp"
#include "qtau/lattice.hpp"
#include "qtau/weyl_sums.hpp"

namespace qtau {

Int ManifoldSpec::homology_order() const {
    Int h(1);
    for (const auto& link : components) {
        auto lk = link.linking_matrix();
        int m = (int)lk.size();
        // integer determinant by fraction-free elimination over Int
        std::vector<std::vector<Int>> a(m, std::vector<Int>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) a[i][j] = lk[i][j];
        Int det(1), prev(1);
        int sign = 1;
        bool zero = false;
        for (int k = 0; k < m && !zero; ++k) {
            if (a[k][k] == 0) {
                int p = -1;
                for (int i = k + 1; i < m; ++i)
                    if (a[i][k] != 0) { p = i; break; }
                if (p < 0) { zero = true; break; }
                std::swap(a[k], a[p]);
                sign = -sign;
            }
            for (int i = k + 1; i < m; ++i)
                for (int j = k + 1; j < m; ++j)
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            prev = a[k][k];
        }
        if (zero || (m > 0 && a[m - 1][m - 1] == 0)) return Int(0);
        det = m == 0 ? Int(1) : a[m - 1][m - 1];
        h *= sign > 0 ? det : -det;
    }
    for (const auto& child : connected_sum) {
        Int c = child.homology_order();
        if (c == 0) return Int(0);
        h *= c;
    }
    return abs(h);
}

int ManifoldSpec::total_component_count() const {
    int n = 0;
    for (const auto& l : components) n += l.component_count();
    for (const auto& c : connected_sum) n += c.total_component_count();
    return n;
}

SignatureData signature(const std::vector<std::vector<long>>& m0) {
    int n = (int)m0.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i) {
        if ((int)m0[i].size() != n) throw invalid_input_error("signature: matrix not square");
        for (int j = 0; j < n; ++j) {
            if (m0[i][j] != m0[j][i]) throw invalid_input_error("signature: matrix not symmetric");
            m[i][j] = Rat(m0[i][j]);
        }
    }
    SignatureData sig;
    std::vector<char> alive(n, 1);
    int remaining = n;
    while (remaining > 0) {
        int piv = -1;
        for (int i = 0; i < n; ++i)
            if (alive[i] && m[i][i] != 0) { piv = i; break; }
        if (piv >= 0) {
            Rat p = m[piv][piv];
            (p > 0 ? sig.positive : sig.negative)++;
            alive[piv] = 0;
            --remaining;
            for (int i = 0; i < n; ++i) {
                if (!alive[i]) continue;
                for (int j = 0; j < n; ++j) {
                    if (!alive[j]) continue;
                    m[i][j] -= m[i][piv] * m[piv][j] / p;
                }
            }
            continue;
        }
        // all alive diagonal entries are zero: look for a hyperbolic pair
        int hi = -1, hj = -1;
        for (int i = 0; i < n && hi < 0; ++i) {
            if (!alive[i]) continue;
            for (int j = i + 1; j < n; ++j)
                if (alive[j] && m[i][j] != 0) { hi = i; hj = j; break; }
        }
        if (hi < 0) {
            sig.zero += remaining;
            break;
        }
        Rat aij = m[hi][hj];
        sig.positive++;
        sig.negative++;
        alive[hi] = alive[hj] = 0;
        remaining -= 2;
        // Schur complement of the 2x2 block [[0, a], [a, 0]]
        for (int i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            for (int j = 0; j < n; ++j) {
                if (!alive[j]) continue;
                m[i][j] -= (m[i][hi] * m[hj][j] + m[i][hj] * m[hi][j]) / aij;
            }
        }
    }
    return sig;
}

bool psi_nonzero_at_level(const RootSystem& rs, long r) {
    for (long k = 0; k < rs.s(); ++k)
        if (rs.rho_pair((int)k) % r == 0) return false;
    return true;
}

namespace {

FieldPtr flavor_field(const RootSystem& rs, long r, Flavor flavor) {
    return CycField::make(flavor == Flavor::Projective ? r : 2 * rs.D() * r);
}

CycNum eval_flavor(const LaurentHalf& q, const RootSystem& rs, const FieldPtr& f, long a,
                   Flavor flavor) {
    if (flavor == Flavor::Projective) return evaluate_integer_q(q, f, a);
    (void)rs;
    return evaluate(q, f, a);
}

} // namespace

CycNum F_sum(const RootSystem& rs, long r, long a, const FramedLink& link, Flavor flavor,
             const Limits& lim) {
    if (flavor == Flavor::Center) throw invalid_input_error("use F_center for the center flavor");
    if (r < 1) throw invalid_input_error("F_sum: r >= 1");
    if (!psi_nonzero_at_level(rs, r))
        throw invalid_input_error("F_sum: psi vanishes at this level (r too small: r=" +
                                  std::to_string(r) + " for " + rs.name() + ")");
    LatticeDomain dom{&rs, r};
    auto domain = enumerate_domain(
        dom, flavor == Flavor::Projective ? DomainSet::OpenAlcoveRhoY : DomainSet::OpenAlcoveX);
    auto field = flavor_field(rs, r, flavor);
    int m = link.component_count();
    long tuples = 1;
    for (int i = 0; i < m; ++i) {
        tuples *= (long)domain.size();
        if (tuples > rs.limits().max_enumeration)
            throw resource_error("F_sum coloring count exceeds limit");
    }
    CycNum acc(field);
    std::vector<size_t> idx(m, 0);
    std::vector<Weight> colors(m);
    while (true) {
        for (int i = 0; i < m; ++i) colors[i] = domain[idx[i]];
        LaurentHalf q = q_value(rs, link, colors, lim);
        if (!q.is_zero()) acc += eval_flavor(q, rs, field, a, flavor);
        int i = 0;
        for (; i < m; ++i) {
            if (++idx[i] < domain.size()) break;
            idx[i] = 0;
        }
        if (i == m) break;
    }
    return acc;
}

CycNum F_center(const RootSystem& rs, long r, long a,
                const std::vector<std::vector<long>>& linking) {
    auto field = CycField::make(2 * rs.D() * r);
    int m = (int)linking.size();
    auto elems = rs.center_elements();
    CycNum acc(field);
    std::vector<size_t> idx(m, 0);
    while (true) {
        // exponent: zeta^{r(r-h)/2 * sum_ij l_ij ip2D(gi, gj)}
        long s2d = 0;
        for (int i = 0; i < m; ++i) {
            Weight gi = rs.center_lift(elems[idx[i]]);
            for (int j = 0; j < m; ++j) {
                Weight gj = rs.center_lift(elems[idx[j]]);
                s2d += linking[i][j] * rs.ip2D(gi, gj);
            }
        }
        if (s2d % 2 != 0) throw check_error("F_center: odd quadratic sum");
        acc += CycNum::root_power(field, a, r * (r - rs.h()) * (s2d / 2));
        int i = 0;
        for (; i < m; ++i) {
            if (++idx[i] < elems.size()) break;
            idx[i] = 0;
        }
        if (i == m) break;
    }
    return acc;
}

CycNum F_unknot(const RootSystem& rs, long r, long a, int framing_sign, Flavor flavor) {
    struct Key {
        std::string rs_name;
        long r, a;
        int sign;
        int flavor;
        bool operator<(const Key& o) const {
            return std::tie(rs_name, r, a, sign, flavor) <
                   std::tie(o.rs_name, o.r, o.a, o.sign, o.flavor);
        }
    };
    static std::map<Key, CycNum> cache;
    static std::mutex mu;
    Key key{rs.name(), r, a, framing_sign, (int)flavor};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    CycNum v = flavor == Flavor::Center
                   ? gauss_center(rs, r, framing_sign, flavor_field(rs, r, flavor), a)
                   : F_sum(rs, r, a, make_unknot(framing_sign), flavor);
    std::lock_guard<std::mutex> lock(mu);
    cache[key] = v;
    return v;
}

namespace {

// tau of a single framed-link presentation (one surgery diagram).
InvariantResult tau_one(const FramedLink& link, const RootSystem& rs, long r, long a,
                        Flavor flavor, const Limits& lim) {
    InvariantResult res;
    res.flavor = flavor;
    res.r = r;
    res.zeta_exponent = a;
    auto lk = link.linking_matrix();
    res.sig = signature(lk);
    res.has_zero_eigenvalues = res.sig.zero > 0;
    auto field = flavor_field(rs, r, flavor);

    CycNum fplus = F_unknot(rs, r, a, +1, flavor);
    CycNum fminus = F_unknot(rs, r, a, -1, flavor);
    if (fplus.is_zero() || fminus.is_zero()) {
        res.defined = false;
        res.value = CycNum(field);
        return res;
    }
    CycNum num = flavor == Flavor::Center ? F_center(rs, r, a, lk)
                                          : F_sum(rs, r, a, link, flavor, lim);
    CycNum den = fplus.pow(res.sig.positive) * fminus.pow(res.sig.negative);
    res.value = num / den;
    return res;
}

} // namespace

InvariantResult tau(const ManifoldSpec& spec, const RootSystem& rs, long r, long a, Flavor flavor,
                    const Limits& lim) {
    auto field = flavor_field(rs, r, flavor);
    InvariantResult res;
    res.flavor = flavor;
    res.r = r;
    res.zeta_exponent = a;
    res.value = CycNum::from_rational(field, Rat(1));
    for (const auto& link : spec.components) {
        InvariantResult part = tau_one(link, rs, r, a, flavor, lim);
        res.sig.positive += part.sig.positive;
        res.sig.negative += part.sig.negative;
        res.sig.zero += part.sig.zero;
        res.has_zero_eigenvalues |= part.has_zero_eigenvalues;
        res.defined &= part.defined;
        if (res.defined) res.value *= part.value;
    }
    for (const auto& child : spec.connected_sum) {
        InvariantResult part = tau(child, rs, r, a, flavor, lim);
        res.sig.positive += part.sig.positive;
        res.sig.negative += part.sig.negative;
        res.sig.zero += part.sig.zero;
        res.has_zero_eigenvalues |= part.has_zero_eigenvalues;
        res.defined &= part.defined;
        if (res.defined) res.value *= part.value;
    }
    if (!res.defined) res.value = CycNum(field);
    return res;
}

CycNum tau_lens_closed_form(const RootSystem& rs, long r, long b, long a) {
    if (!is_prime_long(r) || r % 2 == 0)
        throw invalid_input_error("tau_lens_closed_form: r must be an odd prime");
    if (gcd_long(b, r) != 1) throw invalid_input_error("tau_lens_closed_form: gcd(b, r) = 1");
    if (!psi_nonzero_at_level(rs, r))
        throw invalid_input_error("tau_lens_closed_form: psi vanishes at this level");
    auto field = CycField::make(r);
    long sn = b > 0 ? 1 : -1;
    long babs = b * sn;
    long bstar = inv_mod(b, r);
    // Legendre(|b|, r)^l
    long leg = pow_mod(babs, (r - 1) / 2, r);
    long leg_sign = leg == r - 1 ? -1 : 1;
    long lpow = 1;
    for (int i = 0; i < rs.rank(); ++i) lpow *= leg_sign;
    // xi^{((sn(b)-b)/2 |rho|^2)~} with (x/y)~ = x y* mod r
    Rat e = Rat(sn - b) * rs.inner(rs.rho(), rs.rho()) / 2;
    Int den_mod = e.get_den() % r;
    if (den_mod == 0) throw invalid_input_error("tau_lens_closed_form: r divides exponent denominator");
    long e_red = rat_mod_prime(e, r);
    CycNum val = CycNum::root_power(field, a, e_red).scaled(Rat(lpow));
    CycNum one = CycNum::from_rational(field, Rat(1));
    for (long k = 0; k < rs.s(); ++k) {
        long ra = rs.rho_pair((int)k);
        CycNum numf = one - CycNum::root_power(field, a, -bstar * ra);
        CycNum denf = one - CycNum::root_power(field, a, -sn * ra);
        val = val * numf / denf;
    }
    return val;
}

bool s_matrix_check(const RootSystem& rs, long r, long a) {
    if (gcd_long(r, rs.d() * rs.det_cartan()) != 1)
        throw invalid_input_error("s_matrix_check: gcd(r, d det) = 1 required");
    if (!psi_nonzero_at_level(rs, r))
        throw invalid_input_error("s_matrix_check: psi vanishes at this level");
    LatticeDomain dom{&rs, r};
    auto pts = enumerate_domain(dom, DomainSet::OpenAlcoveRhoY);
    int n = (int)pts.size();
    if (n == 0) return false;
    auto field = CycField::make(r);
    std::vector<CycNum> S((size_t)n * n, CycNum(field));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            S[(size_t)i * n + j] = evaluate_integer_q(hopf_entry(rs, pts[i], pts[j]), field, a);
    // S Sbar = c Id with c != 0
    CycNum c0(field);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CycNum acc(field);
            for (int k = 0; k < n; ++k) acc += S[(size_t)i * n + k] * S[(size_t)j * n + k].conj();
            if (i == j) {
                if (i == 0) {
                    c0 = acc;
                    if (c0.is_zero()) return false;
                } else if (acc != c0) {
                    return false;
                }
            } else if (!acc.is_zero()) {
                return false;
            }
        }
    return true;
}

bool splitting_check(const ManifoldSpec& spec, const RootSystem& rs, long r, long a,
                     const Limits& lim) {
    if (gcd_long(r, rs.det_cartan()) != 1)
        throw invalid_input_error("splitting_check: gcd(r, det) = 1 required");
    long twoD = 2 * rs.D();
    if (gcd_long(r, twoD) != 1)
        throw invalid_input_error("splitting_check: gcd(r, 2D) = 1 required for the embedding");
    long a_xi = mod_nonneg(twoD * a, r);
    auto big = CycField::make(twoD * r);

    InvariantResult full = tau(spec, rs, r, a, Flavor::Full, lim);
    InvariantResult proj = tau(spec, rs, r, a_xi, Flavor::Projective, lim);
    InvariantResult cent = tau(spec, rs, r, a, Flavor::Center, lim);

    CycNum proj_big = embed_root_value(proj.value, a_xi, big, mod_nonneg(twoD * a, twoD * r));
    if (!(full.value == proj_big * cent.value)) return false;

    // F-level product identity on each presentation
    for (const auto& link : spec.components) {
        CycNum fg = F_sum(rs, r, a, link, Flavor::Full, lim);
        CycNum fp = F_sum(rs, r, a_xi, link, Flavor::Projective, lim);
        CycNum fc = F_center(rs, r, a, link.linking_matrix());
        CycNum fp_big = embed_root_value(fp, a_xi, big, mod_nonneg(twoD * a, twoD * r));
        if (!(fg == fp_big * fc)) return false;
    }
    for (const auto& child : spec.connected_sum)
        if (!splitting_check(child, rs, r, a, lim)) return false;
    return true;
}

bool kirby_equivalence_check(const ManifoldSpec& a_spec, const ManifoldSpec& b_spec,
                             const RootSystem& rs, long r, long a, Flavor flavor,
                             const Limits& lim) {
    InvariantResult ta = tau(a_spec, rs, r, a, flavor, lim);
    InvariantResult tb = tau(b_spec, rs, r, a, flavor, lim);
    if (ta.defined != tb.defined) return false;
    return ta.value == tb.value;
}

} // namespace qtau
