#include "qtau/link_engine.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qtau/cyclotomic.hpp"
#include "qtau/errors.hpp"
#include "qtau/lattice.hpp"
#include "qtau/weyl_sums.hpp"

namespace qtau {

namespace {
constexpr long kTwoD4 = 4; // sl2 engine scale: values in Z[q^{+-1/4}]
} // namespace

int BraidLink::component_count() const {
    int m = 0;
    for (int c : component_map) m = std::max(m, c + 1);
    return m;
}

void BraidLink::validate() const {
    if (strands < 1) throw invalid_input_error("braid: strands >= 1 required");
    for (int l : word) {
        int k = std::abs(l);
        if (k < 1 || k >= strands)
            throw invalid_input_error("braid: generator index out of range: " + std::to_string(l));
    }
    if ((int)component_map.size() != strands)
        throw invalid_input_error("braid: component_map must have one entry per strand");
    // cycles of the closure permutation must agree with component_map
    std::vector<int> pos(strands);
    std::iota(pos.begin(), pos.end(), 0);
    for (int l : word) std::swap(pos[std::abs(l) - 1], pos[std::abs(l)]);
    // strand s ends at position p where pos[p] = s; closure joins it to strand p
    std::vector<int> next(strands);
    for (int p = 0; p < strands; ++p) next[pos[p]] = p;
    int m = component_count();
    for (int s = 0; s < strands; ++s) {
        if (component_map[s] < 0 || component_map[s] >= m)
            throw invalid_input_error("braid: component ids must be 0..m-1");
        if (component_map[next[s]] != component_map[s])
            throw invalid_input_error("braid: component_map splits a closure cycle");
    }
    std::vector<char> used(m, 0);
    for (int s = 0; s < strands; ++s) used[component_map[s]] = 1;
    for (int c = 0; c < m; ++c)
        if (!used[c]) throw invalid_input_error("braid: unused component id");
    // distinct cycles must have distinct ids
    std::vector<int> cyc(strands, -1);
    int ncyc = 0;
    for (int s = 0; s < strands; ++s) {
        if (cyc[s] >= 0) continue;
        for (int t = s; cyc[t] < 0; t = next[t]) cyc[t] = ncyc;
        ++ncyc;
    }
    if (ncyc != m) throw invalid_input_error("braid: component ids merge distinct cycles");
    if ((int)framings.size() != m)
        throw invalid_input_error("braid: framings must have one entry per component");
}

int FramedLink::component_count() const {
    if (is_special()) return special().component_count();
    return braid().component_count();
}

std::vector<long> FramedLink::framings() const {
    if (is_special()) return special().framings;
    return braid().framings;
}

std::vector<std::vector<long>> FramedLink::linking_matrix() const {
    int m = component_count();
    std::vector<std::vector<long>> lk(m, std::vector<long>(m, 0));
    std::vector<long> fr = framings();
    for (int i = 0; i < m; ++i) lk[i][i] = fr[i];
    if (is_special()) {
        if (special().kind == SpecialLink::Kind::Hopf) lk[0][1] = lk[1][0] = 1;
        return lk;
    }
    const BraidLink& b = braid();
    b.validate();
    std::vector<int> pos(b.strands);
    std::iota(pos.begin(), pos.end(), 0);
    std::vector<std::vector<long>> cross(m, std::vector<long>(m, 0));
    for (int l : b.word) {
        int k = std::abs(l) - 1;
        int sa = pos[k], sb = pos[k + 1];
        int ca = b.component_map[sa], cb = b.component_map[sb];
        int sg = l > 0 ? 1 : -1;
        if (ca != cb) {
            cross[ca][cb] += sg;
            cross[cb][ca] += sg;
        }
        std::swap(pos[k], pos[k + 1]);
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == j) continue;
            if (cross[i][j] % 2 != 0) throw check_error("odd inter-component crossing count");
            lk[i][j] = cross[i][j] / 2;
        }
    return lk;
}

FramedLink make_unknot(long framing) {
    return FramedLink{SpecialLink{SpecialLink::Kind::Unknot, Chirality::Right, {framing}}};
}
FramedLink make_hopf(long f1, long f2) {
    return FramedLink{SpecialLink{SpecialLink::Kind::Hopf, Chirality::Right, {f1, f2}}};
}
FramedLink make_trefoil(Chirality chir, long framing) {
    return FramedLink{SpecialLink{SpecialLink::Kind::Trefoil, chir, {framing}}};
}
FramedLink make_fig8(long framing) {
    return FramedLink{SpecialLink{SpecialLink::Kind::FigureEight, Chirality::Right, {framing}}};
}

LaurentHalf jones_trefoil(long N, Chirality chir) {
    if (N < 1) throw invalid_input_error("jones_trefoil: N >= 1");
    // right-hand trefoil: [N] q^{1-N} sum_n q^{-nN} (1-q^{1-N})...(1-q^{n-N})
    LaurentHalf one = LaurentHalf::one(kTwoD4);
    LaurentHalf sum = LaurentHalf::zero(kTwoD4);
    LaurentHalf prod = one;
    for (long n = 0; n < N; ++n) {
        if (n > 0) prod *= one - LaurentHalf::monomial(kTwoD4, 4 * (n - N));
        sum += prod.shifted(4 * (-n * N));
    }
    LaurentHalf res = quantum_integer(kTwoD4, N) * sum.shifted(4 * (1 - N));
    return chir == Chirality::Right ? res : res.mirrored();
}

LaurentHalf jones_fig8(long N) {
    if (N < 1) throw invalid_input_error("jones_fig8: N >= 1");
    LaurentHalf one = LaurentHalf::one(kTwoD4);
    LaurentHalf sum = LaurentHalf::zero(kTwoD4);
    LaurentHalf prod = one;
    for (long n = 0; n < N; ++n) {
        if (n > 0) {
            prod *= one - LaurentHalf::monomial(kTwoD4, 4 * (N - n));
            prod *= one - LaurentHalf::monomial(kTwoD4, 4 * (N + n));
        }
        sum += prod.shifted(4 * (-n * N));
    }
    return quantum_integer(kTwoD4, N) * sum;
}

// ---------------------------------------------------------------------------
// Braid engine.  R acts on V_A (x) V_B as P o D o Theta with
//   Theta(f_i (x) f_j) = sum_n v^{n(n-1)/2} [prod_t (v-v^{-1})[A-i+t-1][j+t]/[t]]
//                        f_{i-n} (x) f_{j+n},
//   D = v^{wt (x) wt / 2},  v = q^{1/2}.
// Convention fixed so that the closure of sigma_1^3 is the right trefoil and
// a positive kink contributes the twist q^{(N^2-1)/4}.
// ---------------------------------------------------------------------------
namespace {

struct SparseOp {
    // column -> list of (row, value); square, acting on pair states (i,j) -> i*B? no:
    // states indexed by caller
    std::vector<std::vector<std::pair<int, LaurentHalf>>> cols;
};

// Crossing matrices on V_A (x) V_B with basis index i*B+j; image in V_B (x) V_A
// with index j'*A+i'.
SparseOp crossing_op(long A, long B, bool positive) {
    SparseOp op;
    op.cols.resize(A * B);
    LaurentHalf vmv = LaurentHalf::monomial(kTwoD4, 2) - LaurentHalf::monomial(kTwoD4, -2);
    if (positive) {
        for (long i = 0; i < A; ++i)
            for (long j = 0; j < B; ++j) {
                LaurentHalf coef = LaurentHalf::one(kTwoD4);
                long nmax = std::min(i, B - 1 - j);
                for (long n = 0; n <= nmax; ++n) {
                    if (n > 0) {
                        coef *= vmv;
                        coef *= quantum_integer(kTwoD4, A - i + n - 1);
                        coef *= quantum_integer(kTwoD4, j + n);
                        coef = coef.divided_exact(quantum_integer(kTwoD4, n), "R-matrix");
                    }
                    long ii = i - n, jj = j + n;
                    long w1 = A - 1 - 2 * ii, w2 = B - 1 - 2 * jj;
                    // v^{n(n-1)/2 + w1 w2/2}: exponent in quarter units = n(n-1) + w1 w2
                    LaurentHalf term = coef.shifted(n * (n - 1) + w1 * w2);
                    if (!term.is_zero()) op.cols[i * B + j].push_back({(int)(jj * A + ii), term});
                }
            }
        return op;
    }
    // negative crossing: Rhat^{-1} = Theta^{-1} o D^{-1} o P^{-1} built on V_B (x) V_A.
    // First D^{-1} P^{-1}: f_i (x) f_j (in V_A (x) V_B) -> v^{-w_i w_j/2} f_j (x) f_i.
    // Then Theta^{-1} = sum_k (-Nil)^k with Nil the strictly-shifting part of Theta.
    // Build Theta's nilpotent part on V_B (x) V_A (index a*A+b? careful):
    // states of V_B (x) V_A are (p, q), p < B, q < A, index p*A + q.
    std::vector<std::vector<std::pair<int, LaurentHalf>>> nil(B * A);
    for (long p = 0; p < B; ++p)
        for (long q = 0; q < A; ++q) {
            LaurentHalf coef = LaurentHalf::one(kTwoD4);
            long nmax = std::min(p, A - 1 - q);
            for (long n = 1; n <= nmax; ++n) {
                coef *= vmv;
                coef *= quantum_integer(kTwoD4, B - p + n - 1);
                coef *= quantum_integer(kTwoD4, q + n);
                coef = coef.divided_exact(quantum_integer(kTwoD4, n), "R-matrix inv");
                LaurentHalf term = coef.shifted(n * (n - 1));
                if (!term.is_zero())
                    nil[p * A + q].push_back({(int)((p - n) * A + (q + n)), term});
            }
        }
    // Theta^{-1} columns by geometric series (finite: shifts strictly decrease p)
    std::vector<std::vector<std::pair<int, LaurentHalf>>> thinv(B * A);
    for (long c = 0; c < B * A; ++c) {
        std::map<int, LaurentHalf> acc, cur;
        acc[c] = LaurentHalf::one(kTwoD4);
        cur[c] = LaurentHalf::one(kTwoD4);
        while (!cur.empty()) {
            std::map<int, LaurentHalf> nxt;
            for (auto& [st, val] : cur)
                for (auto& [st2, w] : nil[st]) {
                    LaurentHalf add = -(val * w);
                    auto it = nxt.find(st2);
                    if (it == nxt.end()) nxt.emplace(st2, add);
                    else it->second += add;
                }
            for (auto& [st, val] : nxt) {
                auto it = acc.find(st);
                if (it == acc.end()) acc.emplace(st, val);
                else it->second += val;
            }
            cur = std::move(nxt);
        }
        for (auto& [st, val] : acc)
            if (!val.is_zero()) thinv[c].push_back({st, val});
    }
    op.cols.resize(A * B);
    for (long i = 0; i < A; ++i)
        for (long j = 0; j < B; ++j) {
            long w1 = A - 1 - 2 * i, w2 = B - 1 - 2 * j;
            long mid = j * A + i; // after P^{-1}: (j, i) in V_B (x) V_A
            for (auto& [st, val] : thinv[mid])
                op.cols[i * B + j].push_back({(int)st, val.shifted(-w1 * w2)});
        }
    return op;
}

} // namespace

LaurentHalf braid_jones_sl2(const BraidLink& link, const std::vector<long>& colors,
                            const Limits& lim) {
    link.validate();
    const int n = link.strands;
    if ((int)colors.size() != link.component_count())
        throw invalid_input_error("braid colors: one per component");
    for (long N : colors)
        if (N < 1) throw invalid_input_error("braid colors must be positive here");

    // strand colors and total dimension
    std::vector<long> strand_color(n);
    long dim = 1;
    for (int s = 0; s < n; ++s) {
        strand_color[s] = colors[link.component_map[s]];
        dim *= strand_color[s];
        if (dim > lim.max_braid_dim)
            throw resource_error("braid tensor dimension exceeds limit " +
                                 std::to_string(lim.max_braid_dim));
    }

    // self-writhe per component (for the 0-framing correction)
    std::vector<int> pos(n);
    std::iota(pos.begin(), pos.end(), 0);
    std::vector<long> self_writhe(link.component_count(), 0);
    for (int l : link.word) {
        int k = std::abs(l) - 1;
        int sa = pos[k], sb = pos[k + 1];
        if (link.component_map[sa] == link.component_map[sb])
            self_writhe[link.component_map[sa]] += l > 0 ? 1 : -1;
        std::swap(pos[k], pos[k + 1]);
    }

    // enumerate basis states grouped by total index sum (conserved by R)
    std::vector<long> col0(n);
    for (int s = 0; s < n; ++s) col0[s] = strand_color[s];

    auto enumerate_states = [&](const std::vector<long>& bounds) {
        std::vector<std::vector<int>> states;
        std::vector<int> st(n, 0);
        while (true) {
            states.push_back(st);
            int i = 0;
            for (; i < n; ++i) {
                if (++st[i] < bounds[i]) break;
                st[i] = 0;
            }
            if (i == n) break;
        }
        return states;
    };

    long total_max = 0;
    for (long c : col0) total_max += c - 1;

    // per-block dense matrices M[t]: current-states x initial-states
    std::vector<std::vector<int>> init_states = enumerate_states(col0);
    std::map<std::vector<int>, int> init_index;
    std::vector<std::vector<int>> block_members(total_max + 1);
    for (int s = 0; s < (int)init_states.size(); ++s) {
        init_index[init_states[s]] = s;
        int t = std::accumulate(init_states[s].begin(), init_states[s].end(), 0);
        block_members[t].push_back(s);
    }
    // M stored per block: row-major (cur x init), entries LaurentHalf
    std::vector<std::vector<LaurentHalf>> M(total_max + 1);
    std::vector<std::vector<std::vector<int>>> cur_states_block(total_max + 1);
    for (long t = 0; t <= total_max; ++t) {
        int d = (int)block_members[t].size();
        M[t].assign((size_t)d * d, LaurentHalf::zero(kTwoD4));
        for (int i = 0; i < d; ++i) M[t][(size_t)i * d + i] = LaurentHalf::one(kTwoD4);
        cur_states_block[t].reserve(d);
        for (int idx : block_members[t]) cur_states_block[t].push_back(init_states[idx]);
    }

    std::vector<long> cur_col = col0;
    for (int l : link.word) {
        int k = std::abs(l) - 1;
        long A = cur_col[k], B = cur_col[k + 1];
        SparseOp op = crossing_op(A, B, l > 0);
        std::vector<long> new_col = cur_col;
        std::swap(new_col[k], new_col[k + 1]);

        for (long t = 0; t <= total_max; ++t) {
            int d = (int)block_members[t].size();
            if (d == 0) continue;
            // index map for new states in this block
            std::map<std::vector<int>, int> new_idx;
            std::vector<std::vector<int>> new_states(d);
            {
                // new states: same multiset of bounds; enumerate by transforming
                // old ones is wrong (indices change); enumerate fresh
                std::vector<std::vector<int>> all = enumerate_states(new_col);
                int cnt = 0;
                for (auto& st : all) {
                    int sum = std::accumulate(st.begin(), st.end(), 0);
                    if (sum == (int)t) {
                        new_idx[st] = cnt;
                        new_states[cnt] = st;
                        ++cnt;
                        if (cnt > d) throw check_error("block dimension mismatch");
                    }
                }
                if (cnt != d) throw check_error("block dimension mismatch");
            }
            std::vector<LaurentHalf> out((size_t)d * d, LaurentHalf::zero(kTwoD4));
            for (int ci = 0; ci < d; ++ci) { // over current states (rows of M)
                const std::vector<int>& st = cur_states_block[t][ci];
                int pair_col = st[k] * (int)B + st[k + 1];
                for (auto& [pair_row, val] : op.cols[pair_col]) {
                    std::vector<int> st2 = st;
                    st2[k] = pair_row / (int)A; // index in V_B
                    st2[k + 1] = pair_row % (int)A;
                    int ri = new_idx.at(st2);
                    for (int cj = 0; cj < d; ++cj) {
                        const LaurentHalf& m = M[t][(size_t)ci * d + cj];
                        if (m.is_zero()) continue;
                        out[(size_t)ri * d + cj] += val * m;
                    }
                }
            }
            M[t] = std::move(out);
            cur_states_block[t] = std::move(new_states);
        }
        cur_col = new_col;
    }
    if (cur_col != col0) throw check_error("braid closure colors do not match up");

    // quantum trace with pivot v^{+wt}
    LaurentHalf tr = LaurentHalf::zero(kTwoD4);
    for (long t = 0; t <= total_max; ++t) {
        int d = (int)block_members[t].size();
        for (int i = 0; i < d; ++i) {
            const std::vector<int>& st = cur_states_block[t][i];
            // diagonal pairing needs current state == some initial state; find its index
            auto it = init_index.find(st);
            if (it == init_index.end()) throw check_error("state mismatch in closure");
            // position of st within block ordering of initial states
            int cj = -1;
            for (int j = 0; j < d; ++j)
                if (block_members[t][j] == it->second) { cj = j; break; }
            const LaurentHalf& m = M[t][(size_t)i * d + cj];
            if (m.is_zero()) continue;
            long wt = 0;
            for (int s = 0; s < n; ++s) wt += col0[s] - 1 - 2 * st[s];
            tr += m.shifted(2 * wt); // v^{wt} = q^{wt/2}
        }
    }

    // remove the blackboard framing: component c carries framing self_writhe[c]
    for (int c = 0; c < link.component_count(); ++c) {
        long N = colors[c];
        tr = tr.shifted(-self_writhe[c] * (N * N - 1));
    }
    return tr;
}

LaurentHalf framing_shift(const RootSystem& rs, const LaurentHalf& value, const Weight& mu,
                          long dframing) {
    long num = rs.ip2D(mu, mu) - rs.ip2D(rs.rho(), rs.rho());
    if (num % 2 != 0) throw check_error("framing_shift: odd exponent numerator");
    return value.shifted(dframing * (num / 2));
}

namespace {

// sl2-only knots: Q extended by W-invariance (Q(-N) = Q(N), Q(0) = 0).
LaurentHalf q_sl2_knot(const SpecialLink& sp, long N) {
    long n = std::abs(N);
    if (n == 0) return LaurentHalf::zero(kTwoD4);
    LaurentHalf j = sp.kind == SpecialLink::Kind::Trefoil ? jones_trefoil(n, sp.chirality)
                                                          : jones_fig8(n);
    return j * quantum_integer(kTwoD4, n);
}

bool rank1_a(const RootSystem& rs) { return rs.type() == LieType::A && rs.rank() == 1; }

} // namespace

LaurentHalf q_value(const RootSystem& rs, const FramedLink& link,
                    const std::vector<Weight>& colors, const Limits& lim) {
    long two_d = 2 * rs.D();
    if ((int)colors.size() != link.component_count())
        throw invalid_input_error("q_value: one color per component");
    if (link.is_special()) {
        const SpecialLink& sp = link.special();
        switch (sp.kind) {
            case SpecialLink::Kind::Unknot: {
                LaurentHalf ju = quantum_dim(rs, colors[0]);
                return framing_shift(rs, ju * ju, colors[0], sp.framings[0]);
            }
            case SpecialLink::Kind::Hopf: {
                LaurentHalf v = hopf_entry(rs, colors[0], colors[1]) *
                                quantum_dim(rs, colors[0]) * quantum_dim(rs, colors[1]);
                v = framing_shift(rs, v, colors[0], sp.framings[0]);
                return framing_shift(rs, v, colors[1], sp.framings[1]);
            }
            case SpecialLink::Kind::Trefoil:
            case SpecialLink::Kind::FigureEight: {
                if (!rank1_a(rs))
                    throw invalid_input_error(
                        "trefoil/figure-eight colors are implemented for A1 only");
                LaurentHalf v = q_sl2_knot(sp, colors[0].c[0]);
                return framing_shift(rs, v, colors[0], sp.framings[0]);
            }
        }
        throw invalid_input_error("bad special link kind");
    }
    if (!rank1_a(rs)) throw invalid_input_error("braid links are implemented for A1 only");
    const BraidLink& b = link.braid();
    std::vector<long> ns(colors.size());
    for (size_t i = 0; i < colors.size(); ++i) {
        ns[i] = std::abs(colors[i].c[0]);
        if (ns[i] == 0) return LaurentHalf::zero(two_d);
    }
    LaurentHalf v = braid_jones_sl2(b, ns, lim);
    for (size_t i = 0; i < ns.size(); ++i) v *= quantum_integer(kTwoD4, ns[i]);
    for (size_t i = 0; i < ns.size(); ++i)
        v = framing_shift(rs, v, Weight({ns[i]}), b.framings[i]);
    return v;
}

long integrality_exponent_D(const RootSystem& rs, const FramedLink& link,
                            const std::vector<Weight>& colors) {
    auto lk = link.linking_matrix();
    int m = (int)lk.size();
    long acc2D = 0; // 2D * p
    for (int i = 0; i < m; ++i) {
        Weight hi = colors[i] - rs.rho();
        for (int j = 0; j < m; ++j) {
            Weight hj = colors[j] - rs.rho();
            acc2D += lk[i][j] * rs.ip2D(hi, hj);
        }
        acc2D += lk[i][i] * 2 * rs.ip2D(rs.rho(), hi);
    }
    if (acc2D % 2 != 0) throw check_error("integrality exponent: odd 2D*p");
    return acc2D / 2;
}

bool symmetry1_check(const RootSystem& rs, long r, long a, const FramedLink& link,
                     const std::vector<Weight>& colors, const std::vector<Weight>& images,
                     const Limits& lim) {
    LatticeDomain dom{&rs, r};
    for (size_t i = 0; i < colors.size(); ++i) {
        if (affine_reduce(dom, colors[i]).rep != affine_reduce(dom, images[i]).rep)
            throw invalid_input_error("symmetry1_check: images are not W_r-images of the colors");
    }
    LaurentHalf qa = q_value(rs, link, colors, lim);
    LaurentHalf qb = q_value(rs, link, images, lim);
    // both sides must share one fractional-power class (integrality theorem)
    long ra = 0, rb = 0;
    if (!qa.single_residue_mod_2d(ra) || !qb.single_residue_mod_2d(rb)) return false;
    if (!qa.is_zero() && !qb.is_zero() && ra != rb) return false;
    auto field = CycField::make(2 * rs.D() * r);
    if (evaluate(qa, field, a) != evaluate(qb, field, a)) return false;
    // boundary colors must evaluate to zero
    for (size_t i = 0; i < colors.size(); ++i) {
        if (affine_reduce(dom, colors[i]).on_boundary) {
            if (!evaluate(qa, field, a).is_zero()) return false;
        }
    }
    return true;
}

bool symmetry2_check(const RootSystem& rs, long r, long a, const FramedLink& link,
                     const std::vector<Weight>& colors, const std::vector<CenterElement>& gs,
                     const Limits& lim) {
    LatticeDomain dom{&rs, r};
    if (gs.size() != colors.size())
        throw invalid_input_error("symmetry2_check: one center element per component");
    std::vector<Weight> images(colors.size());
    for (size_t i = 0; i < colors.size(); ++i) {
        if (!in_closed_alcove(dom, colors[i]))
            throw invalid_input_error("symmetry2_check: colors must lie in the closed alcove");
        images[i] = center_action(dom, gs[i], colors[i]);
    }
    auto lk = link.linking_matrix();
    int m = (int)lk.size();
    // t = (r-h) sum l_ij (g_i|g_j) + 2 sum_ij l_ij (g_i|mu_j - rho); compute 2D*t
    long t2D = 0;
    for (int i = 0; i < m; ++i) {
        Weight gi = rs.center_lift(gs[i]);
        for (int j = 0; j < m; ++j) {
            Weight gj = rs.center_lift(gs[j]);
            t2D += (r - rs.h()) * lk[i][j] * rs.ip2D(gi, gj);
            t2D += 2 * lk[i][j] * rs.ip2D(gi, colors[j] - rs.rho());
        }
    }
    // twist q^{rt/2} = zeta^{D r t} = zeta^{r * t2D / 2}
    if ((r * t2D) % 2 != 0) throw check_error("symmetry2: odd twist exponent");
    long twist = r * t2D / 2;

    LaurentHalf qa = q_value(rs, link, images, lim);
    LaurentHalf qb = q_value(rs, link, colors, lim).shifted(twist);
    auto field = CycField::make(2 * rs.D() * r);
    return evaluate(qa, field, a) == evaluate(qb, field, a);
}

} // namespace qtau
