#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qtau/numeric.hpp"

namespace qtau {

enum class LieType { A, B, C, D, E, F, G };

std::string lie_type_name(LieType t);
// Parse "A1", "G2", "D4", ... (rank digits after the series letter).
std::pair<LieType, int> parse_algebra(const std::string& s);

// Element of the weight lattice X in fundamental-weight coordinates.
struct Weight {
    std::vector<long> c;

    Weight() = default;
    explicit Weight(std::vector<long> coords) : c(std::move(coords)) {}

    bool operator==(const Weight& o) const { return c == o.c; }
    bool operator!=(const Weight& o) const { return !(*this == o); }
    bool operator<(const Weight& o) const { return c < o.c; }

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight scaled(long k) const;
};

struct WeylElement {
    std::vector<long> mat; // row-major, acts on fundamental-weight coordinates
    int sign;              // determinant, +1 or -1
};

// Invariant-factor presentation of G = X/Y with lifts of the generators.
struct CenterGroup {
    std::vector<long> factors; // only factors > 1, ascending
    std::vector<Weight> lifts; // generator lift in X per factor
    long order() const {
        long o = 1;
        for (long f : factors) o *= f;
        return o;
    }
};

// Residues of a center element along the invariant factors.
struct CenterElement {
    std::vector<long> t;
    bool is_identity() const {
        for (long v : t)
            if (v != 0) return false;
        return true;
    }
};

struct Limits {
    long max_weyl = 1000000;        // refuse W-dependent work above this |W|
    long max_enumeration = 4000000; // lattice-point enumeration cap
    long max_braid_dim = 2000000;   // braid tensor-space dimension cap
};

class RootSystem;
using RsPtr = std::shared_ptr<const RootSystem>;

class RootSystem {
public:
    // Constructs all root data; the Weyl group list is materialised only
    // when its order is within lim.max_weyl (E7/E8 data still build).
    static RsPtr build(LieType type, int rank, const Limits& lim = Limits{});
    static RsPtr build(const std::string& name, const Limits& lim = Limits{});

    LieType type() const { return type_; }
    int rank() const { return rank_; }
    std::string name() const { return lie_type_name(type_) + std::to_string(rank_); }

    const std::vector<std::vector<long>>& cartan() const { return cartan_; }
    const std::vector<long>& d_list() const { return d_; }
    long d() const { return d_max_; }
    long D() const { return D_; }
    long det_cartan() const { return det_cartan_; }
    long h() const { return h_; }
    long h_dual() const { return h_dual_; }
    long s() const { return s_; }
    long dim_g() const { return 2 * s_ + rank_; }

    const Weight& rho() const { return rho_; }
    const std::vector<Weight>& simple_roots() const { return simple_roots_; }     // lambda coords
    const std::vector<Weight>& positive_roots() const { return positive_roots_; } // lambda coords
    const std::vector<std::vector<long>>& positive_roots_alpha() const { return pos_alpha_; }
    const Weight& alpha0() const { return alpha0_; }
    const std::vector<long>& alpha0_alpha() const { return alpha0_alpha_; }

    long weyl_order() const { return weyl_order_; }
    bool weyl_available() const { return weyl_available_; }
    const std::vector<WeylElement>& weyl() const; // throws resource_error when gated off

    const CenterGroup& center() const { return center_; }
    std::vector<CenterElement> center_elements() const;
    Weight center_lift(const CenterElement& g) const;

    const Limits& limits() const { return limits_; }

    // 2D * (u|v), always an integer.
    long ip2D(const Weight& u, const Weight& v) const;
    Rat inner(const Weight& u, const Weight& v) const;
    // (mu|alpha_j) = d_j * mu_j for the j-th simple root.
    long pair_simple(const Weight& mu, int j) const { return d_[j] * mu.c[j]; }
    // (mu|alpha) for a root given by alpha-coordinates; integer for mu in X.
    long pair_root(const Weight& mu, const std::vector<long>& alpha_coords) const;
    // (rho|alpha) for the k-th positive root.
    long rho_pair(int k) const { return rho_pos_pair_[k]; }

    Weight apply(const WeylElement& w, const Weight& mu) const;
    WeylElement simple_reflection(int i) const;

    bool in_Y(const Weight& mu) const;
    bool in_rho_plus_Y(const Weight& mu) const { return in_Y(mu - rho_); }
    // alpha-coordinates when mu lies in the root lattice
    bool alpha_coords(const Weight& mu, std::vector<long>* out) const;

    bool is_dominant(const Weight& mu) const;

private:
    RootSystem() = default;
    void construct(LieType type, int rank, const Limits& lim);
    void check_against_table() const;

    LieType type_;
    int rank_ = 0;
    Limits limits_;
    std::vector<std::vector<long>> cartan_;
    std::vector<long> d_;
    long d_max_ = 1;
    long D_ = 1;
    long det_cartan_ = 1;
    std::vector<std::vector<Rat>> gram_;
    std::vector<std::vector<long>> gram2D_;
    std::vector<std::vector<long>> adjugate_; // adj(cartan), for Y-membership
    std::vector<Weight> simple_roots_;
    std::vector<Weight> positive_roots_;
    std::vector<std::vector<long>> pos_alpha_;
    std::vector<long> rho_pos_pair_;
    Weight rho_;
    Weight alpha0_;
    std::vector<long> alpha0_alpha_;
    long s_ = 0;
    long h_ = 0;
    long h_dual_ = 0;
    long weyl_order_ = 0;
    bool weyl_available_ = false;
    std::vector<WeylElement> weyl_;
    CenterGroup center_;
};

} // namespace qtau
