#include <doctest.h>

#include <random>

#include "qtau/cyclotomic.hpp"

using namespace qtau;

namespace {
CycNum random_cyc(const FieldPtr& f, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rat> c(f->degree());
    for (auto& v : c) v = make_rat(num(rng), den(rng));
    return CycNum(f, c);
}
} // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
    CHECK(cyclotomic_polynomial(5) == std::vector<Int>{1, 1, 1, 1, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Int>{1, -1, 1});
    CHECK(cyclotomic_polynomial(20).size() == 9); // phi(20) = 8
}

TEST_CASE("root of unity relations") {
    auto f = CycField::make(5);
    CycNum z = CycNum::root_power(f, 1, 1);
    CHECK(z * CycNum::root_power(f, 1, 4) == CycNum::from_rational(f, Rat(1)));
    // 1 + z + z^2 + z^3 + z^4 = 0
    CycNum s(f);
    for (int e = 0; e < 5; ++e) s += CycNum::root_power(f, 1, e);
    CHECK(s.is_zero());
}

TEST_CASE("field axioms on random elements") {
    auto f = CycField::make(12); // phi = 4, composite order
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        CycNum a = random_cyc(f, rng), b = random_cyc(f, rng), c = random_cyc(f, rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == CycNum::from_rational(f, Rat(1)));
        }
    }
}

TEST_CASE("inverse worked example") {
    // m=5: inv(1 - z) * (1 - z) = 1
    auto f = CycField::make(5);
    CycNum one = CycNum::from_rational(f, Rat(1));
    CycNum x = one - CycNum::root_power(f, 1, 1);
    CHECK(x.inverse() * x == one);
}

TEST_CASE("conjugation is an involutive automorphism") {
    auto f = CycField::make(20);
    std::mt19937 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        CycNum a = random_cyc(f, rng), b = random_cyc(f, rng);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
    }
    CHECK(CycNum::root_power(f, 1, 3).conj() == CycNum::root_power(f, 1, -3));
}

TEST_CASE("evaluation is a ring homomorphism") {
    auto f = CycField::make(20); // 2Dr with D=2, r=5
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> expo(-6, 6);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        LaurentHalf p(4), q(4);
        for (int t = 0; t < 5; ++t) {
            p += LaurentHalf::monomial(4, expo(rng), Int(coef(rng)));
            q += LaurentHalf::monomial(4, expo(rng), Int(coef(rng)));
        }
        for (long a : {1L, 3L}) {
            CHECK(evaluate(p * q, f, a) == evaluate(p, f, a) * evaluate(q, f, a));
            CHECK(evaluate(p + q, f, a) == evaluate(p, f, a) + evaluate(q, f, a));
        }
    }
}

TEST_CASE("valuation at xi - 1") {
    auto f = CycField::make(7);
    // v(r) = r - 1
    CHECK(valuation_at_xi_minus_1(CycNum::from_rational(f, Rat(7))) == 6);
    // v(xi^n - 1) = 1 for gcd(n, r) = 1
    CycNum one = CycNum::from_rational(f, Rat(1));
    for (long n : {1L, 2L, 3L, 6L})
        CHECK(valuation_at_xi_minus_1(CycNum::root_power(f, 1, n) - one) == 1);
    CHECK(valuation_at_xi_minus_1(one) == 0);
    CHECK(!valuation_at_xi_minus_1(CycNum(f)).has_value());
    // additive under multiplication
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rat> ca(f->degree()), cb(f->degree());
        for (auto& v : ca) v = Rat(coef(rng));
        for (auto& v : cb) v = Rat(coef(rng));
        CycNum a(f, ca), b(f, cb);
        if (a.is_zero() || b.is_zero()) continue;
        auto va = valuation_at_xi_minus_1(a), vb = valuation_at_xi_minus_1(b);
        auto vab = valuation_at_xi_minus_1(a * b);
        CHECK(*vab == *va + *vb);
    }
}

TEST_CASE("integrality witness") {
    auto f = CycField::make(7);
    std::vector<Int> coeffs;
    CycNum x = CycNum::root_power(f, 1, 2).scaled(Rat(3)) - CycNum::root_power(f, 1, 5);
    CHECK(x.integer_coeffs(&coeffs));
    CHECK(!CycNum::from_rational(f, make_rat(1, 2)).integer_coeffs());
}

TEST_CASE("galois rebase round trip") {
    auto f = CycField::make(13);
    std::mt19937 rng(5);
    CycNum a = random_cyc(f, rng);
    // value written in powers of x^5, mapped back
    auto coeffs = a.rebase_coeffs(5);
    CycNum back(f);
    for (int k = 0; k < f->degree(); ++k)
        back += CycNum::root_power(f, 5, k).scaled(coeffs[k]);
    CHECK(back == a);
}

TEST_CASE("embedding into a bigger field") {
    auto small = CycField::make(5);
    auto big = CycField::make(20);
    // xi = y^2 maps to x^{4*3}: check multiplicativity and identity
    CycNum v = CycNum::root_power(small, 1, 1) + CycNum::from_rational(small, Rat(2));
    CycNum w = embed_root_value(v, 2, big, 12);
    // image of y = (x^12)^{2^{-1} mod 5}: y^2 -> x^12 exactly
    CycNum y2 = embed_root_value(CycNum::root_power(small, 1, 2), 2, big, 12);
    CHECK(y2 == CycNum::root_power(big, 1, 12));
    CycNum vw = embed_root_value(v * v, 2, big, 12);
    CHECK(vw == w * w);
}
