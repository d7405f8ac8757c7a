#include "qtau/lattice.hpp"

#include <functional>

#include "qtau/errors.hpp"

namespace qtau {

long alcove_level(const RootSystem& rs, const Weight& mu) {
    return rs.pair_root(mu, rs.alpha0_alpha());
}

bool in_closed_alcove(const LatticeDomain& dom, const Weight& mu) {
    return dom.rs->is_dominant(mu) && alcove_level(*dom.rs, mu) <= dom.r;
}

bool on_alcove_boundary(const LatticeDomain& dom, const Weight& mu) {
    for (long v : mu.c)
        if (v == 0) return true;
    return alcove_level(*dom.rs, mu) == dom.r;
}

namespace {

void check_count_limit(const LatticeDomain& dom, long count) {
    if (count > dom.rs->limits().max_enumeration)
        throw resource_error("domain enumeration of " + std::to_string(count) +
                             " points exceeds limit " +
                             std::to_string(dom.rs->limits().max_enumeration));
}

// all c in [0, r)^l
void iterate_box(int l, long r, const std::function<void(const std::vector<long>&)>& f) {
    std::vector<long> c(l, 0);
    while (true) {
        f(c);
        int i = 0;
        for (; i < l; ++i) {
            if (++c[i] < r) break;
            c[i] = 0;
        }
        if (i == l) break;
    }
}

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// exact solution of (cartan) x = t over Q
std::vector<Rat> solve_cartan(const RootSystem& rs, const Weight& t) {
    const int l = rs.rank();
    std::vector<std::vector<Rat>> m(l, std::vector<Rat>(l + 1));
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j) m[i][j] = Rat(rs.cartan()[i][j]);
        m[i][l] = Rat(t.c[i]);
    }
    for (int col = 0; col < l; ++col) {
        int piv = -1;
        for (int row = col; row < l; ++row)
            if (m[row][col] != 0) { piv = row; break; }
        if (piv < 0) throw check_error("singular Cartan matrix");
        std::swap(m[col], m[piv]);
        Rat p = m[col][col];
        for (int j = col; j <= l; ++j) m[col][j] /= p;
        for (int row = 0; row < l; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rat f = m[row][col];
            for (int j = col; j <= l; ++j) m[row][j] -= f * m[col][j];
        }
    }
    std::vector<Rat> u(l);
    for (int i = 0; i < l; ++i) u[i] = m[i][l];
    return u;
}

} // namespace

std::vector<Weight> enumerate_domain(const LatticeDomain& dom, DomainSet which) {
    const RootSystem& rs = *dom.rs;
    const int l = rs.rank();
    const long r = dom.r;
    if (r < 1) throw invalid_input_error("enumerate_domain: r >= 1 required");
    std::vector<Weight> out;

    switch (which) {
        case DomainSet::PrY:
        case DomainSet::RhoPlusPrY: {
            check_count_limit(dom, ipow(r, l));
            bool shift = which == DomainSet::RhoPlusPrY;
            iterate_box(l, r, [&](const std::vector<long>& c) {
                std::vector<long> lam(l, shift ? 1 : 0);
                for (int j = 0; j < l; ++j)
                    for (int i = 0; i < l; ++i) lam[i] += rs.cartan()[i][j] * c[j];
                out.push_back(Weight(lam));
            });
            break;
        }
        case DomainSet::PrX: {
            check_count_limit(dom, ipow(r, l) * rs.center().order());
            // X is the disjoint union of cosets t + Y over the center group;
            // within each coset the alpha-coordinates u + c (c integral) must
            // land in the half-open box [0, r)^l, which fixes exactly r
            // choices per axis: c_j in [ceil(-u_j), ceil(-u_j) + r).
            for (const auto& g : rs.center_elements()) {
                Weight t = rs.center_lift(g);
                std::vector<Rat> u = solve_cartan(rs, t);
                std::vector<long> lo(l);
                for (int i = 0; i < l; ++i) {
                    Rat nu = -u[i];
                    Int cl;
                    mpz_cdiv_q(cl.get_mpz_t(), nu.get_num().get_mpz_t(),
                               nu.get_den().get_mpz_t());
                    lo[i] = cl.get_si();
                }
                iterate_box(l, r, [&](const std::vector<long>& c) {
                    std::vector<long> lam = t.c;
                    for (int j = 0; j < l; ++j) {
                        long cj = c[j] + lo[j];
                        for (int i = 0; i < l; ++i) lam[i] += rs.cartan()[i][j] * cj;
                    }
                    out.push_back(Weight(lam));
                });
            }
            break;
        }
        case DomainSet::ClosedAlcoveX:
        case DomainSet::OpenAlcoveX:
        case DomainSet::OpenAlcoveRhoY: {
            const bool open = which != DomainSet::ClosedAlcoveX;
            const bool rho_y = which == DomainSet::OpenAlcoveRhoY;
            // (mu|alpha0) = sum_j w_j mu_j, all w_j >= 1 since alpha0 has
            // full support; that bounds the dominant search box.
            std::vector<long> w(l);
            for (int j = 0; j < l; ++j) w[j] = rs.d_list()[j] * rs.alpha0_alpha()[j];
            std::vector<long> mu(l, 0);
            std::function<void(int, long)> rec = [&](int j, long level) {
                if (j == l) {
                    Weight m(mu);
                    if (rho_y && !rs.in_rho_plus_Y(m)) return;
                    check_count_limit(dom, (long)out.size() + 1);
                    out.push_back(m);
                    return;
                }
                for (long v = open ? 1 : 0;; ++v) {
                    long lv = level + v * w[j];
                    if (open ? lv >= r : lv > r) break;
                    mu[j] = v;
                    rec(j + 1, lv);
                }
            };
            rec(0, 0);
            break;
        }
    }
    return out;
}

AffineReduceResult affine_reduce(const LatticeDomain& dom, const Weight& mu0) {
    const RootSystem& rs = *dom.rs;
    const int l = rs.rank();
    Weight mu = mu0;
    long guard = 0;
    while (true) {
        if (++guard > 1000000) throw check_error("affine_reduce failed to terminate");
        bool moved = true;
        while (moved) {
            if (++guard > 1000000) throw check_error("affine_reduce failed to terminate");
            moved = false;
            for (int i = 0; i < l; ++i) {
                if (mu.c[i] < 0) {
                    // s_i(mu) = mu - mu_i alpha_i
                    long ci = mu.c[i];
                    for (int row = 0; row < l; ++row) mu.c[row] -= ci * rs.cartan()[row][i];
                    moved = true;
                }
            }
        }
        long t = alcove_level(rs, mu);
        if (t <= dom.r) break;
        // reflect in the wall (x|alpha0) = r; alpha0 is short so its coroot is itself
        for (int i = 0; i < l; ++i) mu.c[i] -= (t - dom.r) * rs.alpha0().c[i];
    }
    return AffineReduceResult{mu, on_alcove_boundary(dom, mu)};
}

Weight center_action(const LatticeDomain& dom, const CenterElement& g, const Weight& mu) {
    Weight shifted = mu + dom.rs->center_lift(g).scaled(dom.r);
    return affine_reduce(dom, shifted).rep;
}

} // namespace qtau
