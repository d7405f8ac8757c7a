#include "qtau/weyl_sums.hpp"

#include "qtau/errors.hpp"
#include "qtau/lattice.hpp"

namespace qtau {

LaurentHalf psi_product(const RootSystem& rs) {
    long two_d = 2 * rs.D();
    LaurentHalf p = LaurentHalf::one(two_d);
    for (long k = 0; k < rs.s(); ++k) p *= q_sinh(two_d, rs.rho_pair((int)k));
    return p;
}

LaurentHalf psi_weyl_sum(const RootSystem& rs) {
    long two_d = 2 * rs.D();
    LaurentHalf p = LaurentHalf::zero(two_d);
    for (const auto& w : rs.weyl()) {
        Weight wr = rs.apply(w, rs.rho());
        p += LaurentHalf::monomial(two_d, rs.ip2D(rs.rho(), wr), Int(w.sign));
    }
    return p;
}

LaurentHalf psi_shifted_product(const RootSystem& rs) {
    long two_d = 2 * rs.D();
    LaurentHalf p = LaurentHalf::one(two_d);
    for (long k = 0; k < rs.s(); ++k) {
        long e = two_d * rs.rho_pair((int)k); // q^{(alpha|rho)}
        p *= LaurentHalf::monomial(two_d, e) - LaurentHalf::one(two_d);
    }
    return p.shifted(-rs.ip2D(rs.rho(), rs.rho()));
}

LaurentHalf quantum_dim(const RootSystem& rs, const Weight& mu) {
    long two_d = 2 * rs.D();
    LaurentHalf num = LaurentHalf::one(two_d);
    for (const auto& al : rs.positive_roots_alpha()) {
        long p = rs.pair_root(mu, al);
        if (p == 0) return LaurentHalf::zero(two_d);
        num *= q_sinh(two_d, p);
    }
    return num.divided_exact(psi_product(rs), "quantum_dim");
}

LaurentHalf quantum_dim_weyl(const RootSystem& rs, const Weight& mu) {
    long two_d = 2 * rs.D();
    LaurentHalf num = LaurentHalf::zero(two_d);
    for (const auto& w : rs.weyl()) {
        Weight wr = rs.apply(w, rs.rho());
        num += LaurentHalf::monomial(two_d, rs.ip2D(mu, wr), Int(w.sign));
    }
    return num.divided_exact(psi_product(rs), "quantum_dim_weyl");
}

LaurentHalf hopf_entry(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
    long two_d = 2 * rs.D();
    LaurentHalf num = LaurentHalf::zero(two_d);
    for (const auto& w : rs.weyl()) {
        Weight wl = rs.apply(w, lambda);
        num += LaurentHalf::monomial(two_d, rs.ip2D(mu, wl), Int(w.sign));
    }
    return num.divided_exact(psi_product(rs), "hopf_entry");
}

namespace {
long half_exact(long v, const char* what) {
    if (v % 2 != 0) throw check_error(std::string("odd value where even required: ") + what);
    return v / 2;
}
} // namespace

GaussData gauss_full(const RootSystem& rs, long r, const FieldPtr& field, long a) {
    if (field->m() != 2 * rs.D() * r)
        throw invalid_input_error("gauss_full expects the 2Dr-th cyclotomic field");
    LatticeDomain dom{&rs, r};
    long e_rho = rs.ip2D(rs.rho(), rs.rho());
    CycNum acc(field);
    for (const Weight& mu : enumerate_domain(dom, DomainSet::PrX)) {
        // xi^{(|mu|^2-|rho|^2)/2} = zeta^{D(|mu|^2-|rho|^2)}
        long e = half_exact(rs.ip2D(mu, mu) - e_rho, "gauss_full exponent");
        acc += CycNum::root_power(field, a, e);
    }
    return GaussData{GaussData::Kind::Full, acc, r, 1};
}

GaussData gauss_proj(const RootSystem& rs, long r, long b, const FieldPtr& field, long a) {
    if (field->m() != r) throw invalid_input_error("gauss_proj expects the r-th cyclotomic field");
    LatticeDomain dom{&rs, r};
    long e_rho = rs.ip2D(rs.rho(), rs.rho());
    long fourD = 4 * rs.D();
    CycNum acc(field);
    for (const Weight& mu : enumerate_domain(dom, DomainSet::RhoPlusPrY)) {
        long num = rs.ip2D(mu, mu) - e_rho; // 2D(|mu|^2-|rho|^2)
        if (num % fourD != 0) throw check_error("gauss_proj: |mu|^2-|rho|^2 not even");
        acc += CycNum::root_power(field, a, b * (num / fourD));
    }
    return GaussData{b == 1 ? GaussData::Kind::Projective : GaussData::Kind::Twisted, acc, r, b};
}

CycNum gauss_center(const RootSystem& rs, long r, int sign, const FieldPtr& field, long a) {
    if (field->m() != 2 * rs.D() * r)
        throw invalid_input_error("gauss_center expects the 2Dr-th cyclotomic field");
    CycNum acc(field);
    for (const auto& g : rs.center_elements()) {
        Weight lift = rs.center_lift(g);
        // xi^{sign r(r-h)(g|g)/2} = zeta^{sign r(r-h) ip2D(g,g)/2}
        long e = sign * r * (r - rs.h()) * half_exact(rs.ip2D(lift, lift), "gauss_center");
        acc += CycNum::root_power(field, a, e);
    }
    return acc;
}

bool completion_identity_check(const RootSystem& rs, long r, const Weight& beta, long b,
                               CompletionLattice lattice, long a) {
    LatticeDomain dom{&rs, r};
    long e_rho = rs.ip2D(rs.rho(), rs.rho());
    if (lattice == CompletionLattice::XVersion) {
        auto field = CycField::make(2 * rs.D() * r);
        CycNum lhs(field);
        for (const Weight& mu : enumerate_domain(dom, DomainSet::PrX)) {
            long e = half_exact(rs.ip2D(mu, mu) - e_rho, "completion X") + rs.ip2D(beta, mu);
            lhs += CycNum::root_power(field, a, e);
        }
        CycNum rhs = gauss_full(rs, r, field, a).value *
                     CycNum::root_power(field, a, -half_exact(rs.ip2D(beta, beta), "completion X rhs"));
        return lhs == rhs;
    }
    // Y version: beta in Y, exponents are integer powers of xi
    if (!rs.in_Y(beta)) throw invalid_input_error("completion Y version needs beta in Y");
    if (gcd_long(b, r) != 1)
        throw invalid_input_error("completion Y version needs gcd(b, r) = 1");
    auto field = CycField::make(r);
    long fourD = 4 * rs.D();
    long twoD = 2 * rs.D();
    CycNum lhs(field);
    for (const Weight& mu : enumerate_domain(dom, DomainSet::RhoPlusPrY)) {
        long num = rs.ip2D(mu, mu) - e_rho;
        if (num % fourD != 0) throw check_error("completion Y: odd |mu|^2-|rho|^2");
        long ip = rs.ip2D(mu, beta);
        if (ip % twoD != 0) throw check_error("completion Y: (mu|beta) not integral");
        lhs += CycNum::root_power(field, a, b * (num / fourD) + ip / twoD);
    }
    long bstar = inv_mod(b, r);
    long bb = rs.ip2D(beta, beta);
    if (bb % fourD != 0) throw check_error("completion Y: |beta|^2 not even");
    CycNum rhs = gauss_proj(rs, r, b, field, a).value *
                 CycNum::root_power(field, a, -bstar * (bb / fourD));
    return lhs == rhs;
}

} // namespace qtau
