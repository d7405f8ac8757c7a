#pragma once

#include <vector>

#include "qtau/root_system.hpp"

namespace qtau {

// Fundamental-domain data at shifted level r (non-owning view of the root system).
struct LatticeDomain {
    const RootSystem* rs;
    long r;
    long k() const { return r - rs->h(); }
};

enum class DomainSet {
    PrX,            // P_r cap X               (r^l * |G| points)
    PrY,            // P_r cap Y               (r^l points)
    RhoPlusPrY,     // rho + (P_r cap Y)
    ClosedAlcoveX,  // \bar C_r cap X
    OpenAlcoveX,    // interior(C_r) cap X
    OpenAlcoveRhoY, // interior(C_r) cap (rho + Y)
};

std::vector<Weight> enumerate_domain(const LatticeDomain& dom, DomainSet which);

struct AffineReduceResult {
    Weight rep;
    bool on_boundary;
};

// Unique representative of the W_r-orbit of mu in the closed alcove.
AffineReduceResult affine_reduce(const LatticeDomain& dom, const Weight& mu);

// g(mu) = reduce(mu + r * lift(g)); independent of the chosen lift.
Weight center_action(const LatticeDomain& dom, const CenterElement& g, const Weight& mu);

// (mu|alpha0) as an integer, for mu with integer fundamental-weight coords.
long alcove_level(const RootSystem& rs, const Weight& mu);

bool in_closed_alcove(const LatticeDomain& dom, const Weight& mu);
bool on_alcove_boundary(const LatticeDomain& dom, const Weight& mu);

} // namespace qtau
