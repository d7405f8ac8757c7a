#include "qtau/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qtau/errors.hpp"

namespace qtau {

std::string lie_type_name(LieType t) {
    switch (t) {
        case LieType::A: return "A";
        case LieType::B: return "B";
        case LieType::C: return "C";
        case LieType::D: return "D";
        case LieType::E: return "E";
        case LieType::F: return "F";
        case LieType::G: return "G";
    }
    throw invalid_input_error("bad LieType");
}

std::pair<LieType, int> parse_algebra(const std::string& s) {
    if (s.size() < 2) throw invalid_input_error("bad algebra name: " + s);
    LieType t;
    switch (s[0]) {
        case 'A': case 'a': t = LieType::A; break;
        case 'B': case 'b': t = LieType::B; break;
        case 'C': case 'c': t = LieType::C; break;
        case 'D': case 'd': t = LieType::D; break;
        case 'E': case 'e': t = LieType::E; break;
        case 'F': case 'f': t = LieType::F; break;
        case 'G': case 'g': t = LieType::G; break;
        default: throw invalid_input_error("bad algebra name: " + s);
    }
    int rank = 0;
    for (size_t i = 1; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw invalid_input_error("bad algebra rank in: " + s);
        rank = rank * 10 + (s[i] - '0');
    }
    return {t, rank};
}

Weight Weight::operator+(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const {
    Weight r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
    return r;
}

Weight Weight::scaled(long k) const {
    Weight r = *this;
    for (auto& v : r.c) v *= k;
    return r;
}

namespace {

std::vector<std::vector<long>> cartan_matrix(LieType t, int l) {
    auto chain = [&](int n) {
        std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
        for (int i = 0; i < n; ++i) {
            a[i][i] = 2;
            if (i + 1 < n) { a[i][i + 1] = -1; a[i + 1][i] = -1; }
        }
        return a;
    };
    switch (t) {
        case LieType::A: {
            if (l < 1) throw invalid_input_error("A_l needs l >= 1");
            return chain(l);
        }
        case LieType::B: {
            if (l < 2) throw invalid_input_error("B_l needs l >= 2");
            auto a = chain(l);
            a[l - 1][l - 2] = -2; // short alpha_l against long alpha_{l-1}
            return a;
        }
        case LieType::C: {
            if (l < 2) throw invalid_input_error("C_l needs l >= 2");
            auto a = chain(l);
            a[l - 2][l - 1] = -2; // long alpha_l against short alpha_{l-1}
            return a;
        }
        case LieType::D: {
            if (l < 4) throw invalid_input_error("D_l needs l >= 4");
            auto a = chain(l);
            a[l - 1][l - 2] = 0;
            a[l - 2][l - 1] = 0;
            a[l - 1][l - 3] = -1;
            a[l - 3][l - 1] = -1;
            return a;
        }
        case LieType::E: {
            if (l < 6 || l > 8) throw invalid_input_error("E_l needs l in {6,7,8}");
            // Bourbaki: node 2 attaches to node 4 of the chain 1-3-4-5-6(-7-8)
            auto a = chain(l);
            for (int i = 0; i < l; ++i)
                for (int j = 0; j < l; ++j) a[i][j] = (i == j) ? 2 : 0;
            auto link = [&](int i, int j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
            link(1, 3); link(3, 4); link(4, 5); link(5, 6);
            link(2, 4);
            if (l >= 7) link(6, 7);
            if (l == 8) link(7, 8);
            return a;
        }
        case LieType::F: {
            if (l != 4) throw invalid_input_error("F_l needs l = 4");
            auto a = chain(4);
            a[2][1] = -2; // double bond 2=>3 (alpha_1,2 long, alpha_3,4 short)
            a[1][2] = -1;
            return a;
        }
        case LieType::G: {
            if (l != 2) throw invalid_input_error("G_l needs l = 2");
            return {{2, -3}, {-1, 2}};
        }
    }
    throw invalid_input_error("bad LieType");
}

// d_i in {1,2,3}, relatively prime, with (d_i a_ij) symmetric.
std::vector<long> symmetrizers(const std::vector<std::vector<long>>& a) {
    int l = (int)a.size();
    std::vector<Rat> d(l, Rat(0));
    d[0] = 1;
    // propagate along edges of the (connected) Dynkin graph
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                if (i == j || a[i][j] == 0) continue;
                if (d[i] != 0 && d[j] == 0) {
                    d[j] = d[i] * Rat(a[i][j]) / Rat(a[j][i]);
                    changed = true;
                }
            }
    }
    Int lcm_den(1);
    for (auto& x : d) {
        if (x == 0) throw invalid_input_error("disconnected Cartan matrix");
        Int den = x.get_den();
        lcm_den = lcm_den / gcd(lcm_den, den) * den;
    }
    std::vector<long> out(l);
    long g = 0;
    for (int i = 0; i < l; ++i) {
        Rat v = d[i] * Rat(lcm_den);
        out[i] = (long)v.get_num().get_si();
        g = gcd_long(g, out[i]);
    }
    for (auto& v : out) v /= g;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (out[i] * a[i][j] != out[j] * a[j][i])
                throw check_error("symmetrizer failure");
    return out;
}

long det_bareiss(std::vector<std::vector<long>> m) {
    int n = (int)m.size();
    long prev = 1;
    long sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) { p = i; break; }
            if (p < 0) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<std::vector<long>> adjugate_matrix(const std::vector<std::vector<long>>& a) {
    int n = (int)a.size();
    std::vector<std::vector<long>> adj(n, std::vector<long>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<std::vector<long>> minor;
            for (int r = 0; r < n; ++r) {
                if (r == j) continue; // adj = transpose of cofactor matrix
                std::vector<long> row;
                for (int c = 0; c < n; ++c) {
                    if (c == i) continue;
                    row.push_back(a[r][c]);
                }
                minor.push_back(row);
            }
            long dmin = minor.empty() ? 1 : det_bareiss(minor);
            adj[i][j] = (((i + j) % 2) ? -1 : 1) * dmin;
        }
    return adj;
}

long weyl_order_formula(LieType t, int l) {
    auto fact = [](long n) {
        long r = 1;
        for (long k = 2; k <= n; ++k) r *= k;
        return r;
    };
    switch (t) {
        case LieType::A: return fact(l + 1);
        case LieType::B:
        case LieType::C: return (1L << l) * fact(l);
        case LieType::D: return (1L << (l - 1)) * fact(l);
        case LieType::E: return l == 6 ? 51840L : (l == 7 ? 2903040L : 696729600L);
        case LieType::F: return 1152;
        case LieType::G: return 12;
    }
    throw invalid_input_error("bad LieType");
}

// Table 1 of the reference data: {d, D, h, h_dual, G invariant factors}.
struct TableRow {
    long d, D, h, h_dual;
    std::vector<long> g_factors;
};

TableRow table1(LieType t, int l) {
    switch (t) {
        case LieType::A: return {1, l + 1, l + 1, l + 1, l + 1 > 1 ? std::vector<long>{l + 1} : std::vector<long>{}};
        case LieType::B:
            return {2, l % 2 ? 2 : 1, 2 * l, 2 * l - 1, {2}};
        case LieType::C: return {2, 1, 2 * l, l + 1, {2}};
        case LieType::D:
            if (l % 2)
                return {1, 4, 2 * l - 2, 2 * l - 2, {4}};
            return {1, 2, 2 * l - 2, 2 * l - 2, {2, 2}};
        case LieType::E:
            if (l == 6) return {1, 3, 12, 12, {3}};
            if (l == 7) return {1, 2, 18, 18, {2}};
            return {1, 1, 30, 30, {}};
        case LieType::F: return {2, 1, 12, 9, {}};
        case LieType::G: return {3, 1, 6, 4, {}};
    }
    throw invalid_input_error("bad LieType");
}

// Smith normal form of A tracking E^{-1} (A = E^{-1} S F^{-1} up to the
// column ops F which we discard).  Returns diag entries and E^{-1}.
void smith_normal_form(std::vector<std::vector<long>> s, std::vector<long>& diag,
                       std::vector<std::vector<long>>& e_inv) {
    int n = (int)s.size();
    e_inv.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i) e_inv[i][i] = 1;

    auto row_swap = [&](int i, int j) {
        std::swap(s[i], s[j]);
        for (int r = 0; r < n; ++r) std::swap(e_inv[r][i], e_inv[r][j]); // columns of E^{-1}
    };
    auto row_sub = [&](int i, int j, long k) { // row_i -= k row_j  =>  col_j += k col_i
        for (int c = 0; c < n; ++c) s[i][c] -= k * s[j][c];
        for (int r = 0; r < n; ++r) e_inv[r][j] += k * e_inv[r][i];
    };
    auto row_neg = [&](int i) {
        for (int c = 0; c < n; ++c) s[i][c] = -s[i][c];
        for (int r = 0; r < n; ++r) e_inv[r][i] = -e_inv[r][i];
    };
    auto col_swap = [&](int i, int j) {
        for (int r = 0; r < n; ++r) std::swap(s[r][i], s[r][j]);
    };
    auto col_sub = [&](int i, int j, long k) {
        for (int r = 0; r < n; ++r) s[r][i] -= k * s[r][j];
    };

    for (int t = 0; t < n; ++t) {
        for (bool clean = false; !clean;) {
            // find minimal nonzero pivot in the remaining block
            int pi = -1, pj = -1;
            for (int i = t; i < n; ++i)
                for (int j = t; j < n; ++j)
                    if (s[i][j] != 0 &&
                        (pi < 0 || std::abs(s[i][j]) < std::abs(s[pi][pj]))) {
                        pi = i; pj = j;
                    }
            if (pi < 0) { clean = true; break; }
            if (pi != t) row_swap(t, pi);
            if (pj != t) col_swap(t, pj);
            if (s[t][t] < 0) row_neg(t);
            clean = true;
            for (int i = t + 1; i < n; ++i)
                if (s[i][t] != 0) {
                    long k = s[i][t] / s[t][t];
                    row_sub(i, t, k);
                    if (s[i][t] != 0) clean = false;
                }
            for (int j = t + 1; j < n; ++j)
                if (s[t][j] != 0) {
                    long k = s[t][j] / s[t][t];
                    col_sub(j, t, k);
                    if (s[t][j] != 0) clean = false;
                }
        }
    }
    // enforce divisibility chain d_t | d_{t+1}
    for (bool again = true; again;) {
        again = false;
        for (int t = 0; t + 1 < n; ++t) {
            if (s[t][t] != 0 && s[t + 1][t + 1] % s[t][t] != 0) {
                // add col t+1 to col t, then re-reduce the 2x2 corner
                for (int r = 0; r < n; ++r) s[r][t] += s[r][t + 1];
                // clear with row/col ops
                while (s[t + 1][t] != 0) {
                    long k = s[t][t] != 0 ? s[t + 1][t] / s[t][t] : 0;
                    if (s[t][t] == 0 || (k == 0 && std::abs(s[t + 1][t]) < std::abs(s[t][t]))) {
                        row_swap(t, t + 1);
                        continue;
                    }
                    row_sub(t + 1, t, k);
                }
                while (s[t][t + 1] != 0) {
                    long k = s[t][t] != 0 ? s[t][t + 1] / s[t][t] : 0;
                    if (s[t][t] == 0 || (k == 0 && std::abs(s[t][t + 1]) < std::abs(s[t][t]))) {
                        col_swap(t, t + 1);
                        continue;
                    }
                    col_sub(t + 1, t, k);
                }
                if (s[t][t] < 0) row_neg(t);
                if (s[t + 1][t + 1] < 0) row_neg(t + 1);
                again = true;
            }
        }
    }
    diag.resize(n);
    for (int i = 0; i < n; ++i) diag[i] = s[i][i];
}

} // namespace

void RootSystem::construct(LieType type, int rank, const Limits& lim) {
    type_ = type;
    rank_ = rank;
    limits_ = lim;
    cartan_ = cartan_matrix(type, rank);
    d_ = symmetrizers(cartan_);
    d_max_ = *std::max_element(d_.begin(), d_.end());
    det_cartan_ = det_bareiss(cartan_);
    if (det_cartan_ <= 0) throw check_error("Cartan determinant not positive");
    adjugate_ = adjugate_matrix(cartan_);

    // gram = A^{-T} diag(d): gram[i][j] = adj(A)[j][i] * d_j / det
    gram_.assign(rank, std::vector<Rat>(rank));
    gram2D_.assign(rank, std::vector<long>(rank));
    Int lcm_den(1);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            // A^{-1} = adj/det with (A^{-1})[j][i] = adj[j][i]/det
            gram_[i][j] = make_rat(adjugate_[j][i] * d_[j], det_cartan_);
            Int den = gram_[i][j].get_den();
            lcm_den = lcm_den / gcd(lcm_den, den) * den;
        }
    D_ = lcm_den.get_si();
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            Rat v = gram_[i][j] * 2 * D_;
            if (v.get_den() != 1) throw check_error("gram2D not integral");
            gram2D_[i][j] = (long)v.get_num().get_si();
        }

    rho_ = Weight(std::vector<long>(rank, 1));

    simple_roots_.clear();
    for (int j = 0; j < rank; ++j) {
        std::vector<long> col(rank);
        for (int i = 0; i < rank; ++i) col[i] = cartan_[i][j];
        simple_roots_.push_back(Weight(col));
    }

    // positive roots: close the simple roots under simple reflections,
    // keeping those that stay in the positive cone (alpha coordinates >= 0).
    std::set<std::vector<long>> seen;
    std::vector<std::vector<long>> frontier;
    for (int j = 0; j < rank; ++j) {
        std::vector<long> e(rank, 0);
        e[j] = 1;
        seen.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<long>> next;
        for (auto& m : frontier) {
            // lambda coords of the root
            std::vector<long> lam(rank, 0);
            for (int i = 0; i < rank; ++i)
                for (int j = 0; j < rank; ++j) lam[i] += cartan_[i][j] * m[j];
            for (int i = 0; i < rank; ++i) {
                // s_i in alpha coords: m' = m - <root, alpha_i> e_i with <.,.> = lam_i
                std::vector<long> m2 = m;
                m2[i] -= lam[i];
                bool nonneg = true, nonzero = false;
                for (long v : m2) {
                    if (v < 0) nonneg = false;
                    if (v != 0) nonzero = true;
                }
                if (nonneg && nonzero && !seen.count(m2)) {
                    seen.insert(m2);
                    next.push_back(m2);
                }
            }
        }
        frontier = std::move(next);
    }
    pos_alpha_.assign(seen.begin(), seen.end());
    s_ = (long)pos_alpha_.size();
    positive_roots_.clear();
    rho_pos_pair_.clear();
    for (auto& m : pos_alpha_) {
        std::vector<long> lam(rank, 0);
        long rp = 0;
        for (int j = 0; j < rank; ++j) {
            for (int i = 0; i < rank; ++i) lam[i] += cartan_[i][j] * m[j];
            rp += d_[j] * m[j]; // (rho|alpha) = sum m_j d_j
        }
        positive_roots_.push_back(Weight(lam));
        rho_pos_pair_.push_back(rp);
    }

    // highest short root: the unique dominant root of squared length 2
    int found = -1;
    for (int k = 0; k < s_; ++k) {
        const Weight& al = positive_roots_[k];
        bool dom = true;
        for (long v : al.c)
            if (v < 0) dom = false;
        if (!dom) continue;
        if (ip2D(al, al) == 4 * D_) { // (alpha|alpha) = 2
            if (found >= 0) throw check_error("multiple dominant short roots");
            found = k;
        }
    }
    if (found < 0) throw check_error("no dominant short root found");
    alpha0_ = positive_roots_[found];
    alpha0_alpha_ = pos_alpha_[found];

    // h = 1 + (alpha0|rho), h_dual = 1 + max (alpha|rho)/d
    h_ = 1 + rho_pos_pair_[found];
    long mx = 0;
    for (long v : rho_pos_pair_) mx = std::max(mx, v);
    if (mx % d_max_ != 0) throw check_error("(theta|rho) not divisible by d");
    h_dual_ = 1 + mx / d_max_;

    // Weyl group
    weyl_order_ = weyl_order_formula(type, rank);
    weyl_available_ = weyl_order_ <= lim.max_weyl;
    if (weyl_available_) {
        std::map<std::vector<long>, int> elems;
        std::vector<long> id(rank * rank, 0);
        for (int i = 0; i < rank; ++i) id[i * rank + i] = 1;
        elems[id] = 1;
        std::vector<std::vector<long>> gens;
        for (int i = 0; i < rank; ++i) {
            std::vector<long> g = id;
            for (int r = 0; r < rank; ++r) g[r * rank + i] -= cartan_[r][i];
            gens.push_back(g);
        }
        std::vector<std::vector<long>> frontier2{id};
        while (!frontier2.empty()) {
            std::vector<std::vector<long>> next;
            for (auto& w : frontier2) {
                int sw = elems[w];
                for (auto& g : gens) {
                    std::vector<long> wg(rank * rank, 0);
                    for (int i = 0; i < rank; ++i)
                        for (int j = 0; j < rank; ++j) {
                            long acc = 0;
                            for (int k = 0; k < rank; ++k) acc += g[i * rank + k] * w[k * rank + j];
                            wg[i * rank + j] = acc;
                        }
                    if (!elems.count(wg)) {
                        elems[wg] = -sw;
                        next.push_back(wg);
                    }
                }
            }
            frontier2 = std::move(next);
        }
        if ((long)elems.size() != weyl_order_)
            throw check_error("Weyl enumeration size mismatch: got " +
                              std::to_string(elems.size()) + ", formula " +
                              std::to_string(weyl_order_));
        weyl_.clear();
        weyl_.reserve(elems.size());
        for (auto& [m, sg] : elems) weyl_.push_back(WeylElement{m, sg});
    }

    // center group G = X / Y from the Smith form of the Cartan matrix
    std::vector<long> diag;
    std::vector<std::vector<long>> e_inv;
    smith_normal_form(cartan_, diag, e_inv);
    center_.factors.clear();
    center_.lifts.clear();
    long prod = 1;
    for (int i = 0; i < rank; ++i) {
        prod *= diag[i];
        if (diag[i] > 1) {
            center_.factors.push_back(diag[i]);
            std::vector<long> lift(rank);
            for (int r = 0; r < rank; ++r) lift[r] = e_inv[r][i];
            center_.lifts.push_back(Weight(lift));
        }
    }
    if (prod != det_cartan_) throw check_error("SNF does not match det");

    check_against_table();
}

void RootSystem::check_against_table() const {
    TableRow row = table1(type_, rank_);
    if (row.d != d_max_ || row.D != D_ || row.h != h_ || row.h_dual != h_dual_)
        throw check_error("computed Lie data disagrees with Table 1 for " + name());
    std::vector<long> fac = center_.factors;
    std::sort(fac.begin(), fac.end());
    std::vector<long> expect = row.g_factors;
    std::sort(expect.begin(), expect.end());
    if (fac != expect) throw check_error("center structure disagrees with Table 1 for " + name());
}

RsPtr RootSystem::build(LieType type, int rank, const Limits& lim) {
    auto rs = std::shared_ptr<RootSystem>(new RootSystem());
    rs->construct(type, rank, lim);
    return rs;
}

RsPtr RootSystem::build(const std::string& name, const Limits& lim) {
    auto [t, r] = parse_algebra(name);
    return build(t, r, lim);
}

const std::vector<WeylElement>& RootSystem::weyl() const {
    if (!weyl_available_)
        throw resource_error("Weyl group of " + name() + " has |W| = " +
                             std::to_string(weyl_order_) + " > limit " +
                             std::to_string(limits_.max_weyl));
    return weyl_;
}

std::vector<CenterElement> RootSystem::center_elements() const {
    std::vector<CenterElement> out;
    std::vector<long> t(center_.factors.size(), 0);
    while (true) {
        out.push_back(CenterElement{t});
        int i = 0;
        for (; i < (int)t.size(); ++i) {
            if (++t[i] < center_.factors[i]) break;
            t[i] = 0;
        }
        if (i == (int)t.size()) break;
    }
    return out;
}

Weight RootSystem::center_lift(const CenterElement& g) const {
    Weight w(std::vector<long>(rank_, 0));
    for (size_t i = 0; i < g.t.size(); ++i) w = w + center_.lifts[i].scaled(g.t[i]);
    return w;
}

long RootSystem::ip2D(const Weight& u, const Weight& v) const {
    long acc = 0;
    for (int i = 0; i < rank_; ++i) {
        if (u.c[i] == 0) continue;
        long row = 0;
        for (int j = 0; j < rank_; ++j) row += gram2D_[i][j] * v.c[j];
        acc += u.c[i] * row;
    }
    return acc;
}

Rat RootSystem::inner(const Weight& u, const Weight& v) const {
    return make_rat(ip2D(u, v), 2 * D_);
}

long RootSystem::pair_root(const Weight& mu, const std::vector<long>& alpha_coords) const {
    long acc = 0;
    for (int j = 0; j < rank_; ++j) acc += alpha_coords[j] * d_[j] * mu.c[j];
    return acc;
}

Weight RootSystem::apply(const WeylElement& w, const Weight& mu) const {
    Weight r(std::vector<long>(rank_, 0));
    for (int i = 0; i < rank_; ++i) {
        long acc = 0;
        for (int j = 0; j < rank_; ++j) acc += w.mat[i * rank_ + j] * mu.c[j];
        r.c[i] = acc;
    }
    return r;
}

WeylElement RootSystem::simple_reflection(int i) const {
    std::vector<long> m(rank_ * rank_, 0);
    for (int r = 0; r < rank_; ++r) m[r * rank_ + r] = 1;
    for (int r = 0; r < rank_; ++r) m[r * rank_ + i] -= cartan_[r][i];
    return WeylElement{m, -1};
}

bool RootSystem::alpha_coords(const Weight& mu, std::vector<long>* out) const {
    // c = A^{-1} mu = adj(A) mu / det, integral iff mu in Y
    std::vector<long> v(rank_);
    for (int i = 0; i < rank_; ++i) {
        long acc = 0;
        for (int j = 0; j < rank_; ++j) acc += adjugate_[i][j] * mu.c[j];
        if (acc % det_cartan_ != 0) return false;
        v[i] = acc / det_cartan_;
    }
    if (out) *out = v;
    return true;
}

bool RootSystem::in_Y(const Weight& mu) const { return alpha_coords(mu, nullptr); }

bool RootSystem::is_dominant(const Weight& mu) const {
    for (long v : mu.c)
        if (v < 0) return false;
    return true;
}

} // namespace qtau
