#pragma once

#include "qtau/cyclotomic.hpp"
#include "qtau/laurent.hpp"
#include "qtau/root_system.hpp"

namespace qtau {

// psi = prod_{alpha>0} (q^{(rho|alpha)/2} - q^{-(rho|alpha)/2})
LaurentHalf psi_product(const RootSystem& rs);
// psi as the alternating Weyl sum sum_w sn(w) q^{(rho|w(rho))}
LaurentHalf psi_weyl_sum(const RootSystem& rs);
// psi = q^{-|rho|^2} prod_{alpha>0} (q^{(alpha|rho)} - 1)
LaurentHalf psi_shifted_product(const RootSystem& rs);

// Quantum dimension J_U(mu), shifted convention; vanishes on chamber walls
// and alternates under W.
LaurentHalf quantum_dim(const RootSystem& rs, const Weight& mu);
// Same via the Weyl-sum formula (1/psi) sum_w sn(w) q^{(mu|w(rho))}.
LaurentHalf quantum_dim_weyl(const RootSystem& rs, const Weight& mu);

// Hopf link entry J_H(mu, lambda) = (1/psi) sum_w sn(w) q^{(mu|w(lambda))}.
LaurentHalf hopf_entry(const RootSystem& rs, const Weight& mu, const Weight& lambda);

struct GaussData {
    enum class Kind { Full, Projective, Twisted, Center };
    Kind kind;
    CycNum value;
    long r;
    long b;
};

// gamma^g(xi,zeta) = sum_{mu in P_r cap X} xi^{(|mu|^2-|rho|^2)/2}, in Q(zeta_{2Dr}).
GaussData gauss_full(const RootSystem& rs, long r, const FieldPtr& field, long a);

// gamma_b^{Pg}(xi) = sum_{mu in rho+(P_r cap Y)} xi^{b(|mu|^2-|rho|^2)/2}, in Q(xi_r).
GaussData gauss_proj(const RootSystem& rs, long r, long b, const FieldPtr& field, long a);

// F^G_{U_pm} = sum_{g in G} xi^{pm r(r-h)(g|g)/2}, in Q(zeta_{2Dr}).
CycNum gauss_center(const RootSystem& rs, long r, int sign, const FieldPtr& field, long a);

enum class CompletionLattice { XVersion, YVersion };

// Completed-square identities:
//   X: sum_{P_r cap X} xi^{(|mu|^2-|rho|^2)/2} xi^{(beta|mu)} = gamma^g xi^{-|beta|^2/2}
//   Y: sum_r xi^{b(|mu|^2-|rho|^2)/2} xi^{(mu|beta)} = gamma_b^{Pg} xi^{-b* |beta|^2/2}
bool completion_identity_check(const RootSystem& rs, long r, const Weight& beta, long b,
                               CompletionLattice lattice, long a);

} // namespace qtau
