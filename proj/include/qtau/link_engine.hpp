#pragma once

#include <variant>
#include <vector>

#include "qtau/laurent.hpp"
#include "qtau/root_system.hpp"

namespace qtau {

enum class Chirality { Left, Right };

struct SpecialLink {
    enum class Kind { Unknot, Hopf, Trefoil, FigureEight };
    Kind kind;
    Chirality chirality = Chirality::Right; // trefoil only
    std::vector<long> framings;             // one per component

    int component_count() const { return kind == Kind::Hopf ? 2 : 1; }
};

// Braid word on `strands` strands, closed up; sigma_i is encoded +/-i (1-based).
struct BraidLink {
    int strands = 0;
    std::vector<int> word;
    std::vector<long> framings;      // one per component
    std::vector<int> component_map;  // strand index -> component id

    int component_count() const;
    void validate() const; // throws invalid_input_error
};

struct FramedLink {
    std::variant<SpecialLink, BraidLink> pres;

    int component_count() const;
    std::vector<long> framings() const;
    // symmetric; diagonal = framings, off-diagonal = linking numbers
    std::vector<std::vector<long>> linking_matrix() const;

    bool is_special() const { return std::holds_alternative<SpecialLink>(pres); }
    const SpecialLink& special() const { return std::get<SpecialLink>(pres); }
    const BraidLink& braid() const { return std::get<BraidLink>(pres); }
};

FramedLink make_unknot(long framing);
FramedLink make_hopf(long f1, long f2);
FramedLink make_trefoil(Chirality chir, long framing);
FramedLink make_fig8(long framing);

// --- closed forms (sl2 color N, 0-framed, values in Z[q^{+-1/4}]) ---
LaurentHalf jones_trefoil(long N, Chirality chir);
LaurentHalf jones_fig8(long N);

// 0-framed invariant J_{L^0} of the braid closure, sl2 colors per component.
// Colors must be positive here; the Q-level wrappers handle Weyl extension.
LaurentHalf braid_jones_sl2(const BraidLink& link, const std::vector<long>& colors,
                            const Limits& lim = Limits{});

// Multiply by q^{dframing (|mu|^2 - |rho|^2)/2}.
LaurentHalf framing_shift(const RootSystem& rs, const LaurentHalf& value, const Weight& mu,
                          long dframing);

// Q_L at the given shifted colors, framings included, extended by
// component-wise Weyl invariance and zero on chamber walls.  Special links
// work for every algebra except Trefoil/FigureEight (rank-1 A only, like the
// braid route).
LaurentHalf q_value(const RootSystem& rs, const FramedLink& link,
                    const std::vector<Weight>& colors, const Limits& lim = Limits{});

// Integrality-theorem exponent p = sum l_ij (mu_i-rho|mu_j-rho) + sum l_ii (2rho|mu_i-rho)
// as a multiple of 1/D: returns D*p (integer).
long integrality_exponent_D(const RootSystem& rs, const FramedLink& link,
                            const std::vector<Weight>& colors);

// First symmetry principle: Q(images) = Q(colors) at every 2Dr-th root of
// unity; `images` must be W_r-equivalent component-wise (this is verified).
bool symmetry1_check(const RootSystem& rs, long r, long a, const FramedLink& link,
                     const std::vector<Weight>& colors, const std::vector<Weight>& images,
                     const Limits& lim = Limits{});

// Second symmetry principle with the explicit twist
// t = (r-h) sum l_ij (g_i|g_j) + 2 sum_{ij} l_ij (g_i|mu_j-rho).
bool symmetry2_check(const RootSystem& rs, long r, long a, const FramedLink& link,
                     const std::vector<Weight>& colors, const std::vector<CenterElement>& gs,
                     const Limits& lim = Limits{});

} // namespace qtau
