#pragma once

#include <string>
#include <vector>

#include "qtau/cyclotomic.hpp"
#include "qtau/link_engine.hpp"
#include "qtau/root_system.hpp"

namespace qtau {

// Surgery presentation: disjoint presentations plus optional connected summands.
struct ManifoldSpec {
    std::string name;
    std::vector<FramedLink> components;
    std::vector<ManifoldSpec> connected_sum;

    // |H1(M, Z)| = |prod det(linking matrix)|; 0 when b1 > 0.
    Int homology_order() const;
    int total_component_count() const;
};

struct SignatureData {
    long positive = 0, negative = 0, zero = 0;
};

// Exact inertia of a symmetric integer matrix (rational congruence reduction).
SignatureData signature(const std::vector<std::vector<long>>& m);

enum class Flavor { Full, Projective, Center };

struct InvariantResult {
    Flavor flavor;
    CycNum value;
    long r = 0;
    long zeta_exponent = 0; // exponent of the evaluation root in its field
    bool defined = true;    // false when F_{U+-} = 0 (value set to 0)
    SignatureData sig;
    bool has_zero_eigenvalues = false;
};

// F-sum of one link: colors range over the open alcove domain of the flavor.
// Full flavor lives in Q(zeta_{2Dr}) via zeta = x^a; projective flavor lives
// in Q(xi_r) via xi = x^{a_xi}.
CycNum F_sum(const RootSystem& rs, long r, long a, const FramedLink& link, Flavor flavor,
             const Limits& lim = Limits{});

// Center-group sum over G^m for a linking matrix, in Q(zeta_{2Dr}).
CycNum F_center(const RootSystem& rs, long r, long a,
                const std::vector<std::vector<long>>& linking);

// tau in the requested flavor.  Full/Center use zeta = x^a in Q(zeta_{2Dr});
// Projective uses xi = x^{a mod r} in Q(xi_r) (pass the xi exponent directly).
InvariantResult tau(const ManifoldSpec& spec, const RootSystem& rs, long r, long a, Flavor flavor,
                    const Limits& lim = Limits{});

// Closed form for the lens space obtained by surgery on U_b (odd prime r,
// gcd(b, r) = 1, psi(xi) != 0); value in Q(xi_r) with xi = x^{a}.
CycNum tau_lens_closed_form(const RootSystem& rs, long r, long b, long a);

// S S^bar is a nonzero scalar times the identity, S_{lambda,mu} = J_H|_{q=xi}
// over Interior(C_r) cap (rho + Y).
bool s_matrix_check(const RootSystem& rs, long r, long a);

// tau^g = tau^{Pg} tau^G and the F-level product identity, both exact.
bool splitting_check(const ManifoldSpec& spec, const RootSystem& rs, long r, long a,
                     const Limits& lim = Limits{});

bool kirby_equivalence_check(const ManifoldSpec& a_spec, const ManifoldSpec& b_spec,
                             const RootSystem& rs, long r, long a, Flavor flavor,
                             const Limits& lim = Limits{});

// Unnormalised F_{U_pm} in the requested flavor (cached per arguments).
CycNum F_unknot(const RootSystem& rs, long r, long a, int framing_sign, Flavor flavor);

// psi evaluated at xi (integer q-powers route); nonzero required for sums.
bool psi_nonzero_at_level(const RootSystem& rs, long r);

} // namespace qtau
