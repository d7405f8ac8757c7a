#include <doctest.h>

#include <random>

#include "qtau/cyclotomic.hpp"
#include "qtau/lattice.hpp"
#include "qtau/link_engine.hpp"
#include "qtau/weyl_sums.hpp"

using namespace qtau;

namespace {
BraidLink trefoil_braid(long framing) {
    return BraidLink{2, {1, 1, 1}, {framing}, {0, 0}};
}
BraidLink fig8_braid(long framing) {
    return BraidLink{3, {1, -2, 1, -2}, {framing}, {0, 0, 0}};
}
} // namespace

TEST_CASE("trefoil closed form basics") {
    CHECK(jones_trefoil(1, Chirality::Right) == LaurentHalf::one(4));
    // N=2: [2] q^{-1} (1 + q^{-2}(1 - q^{-1}))
    LaurentHalf expect =
        quantum_integer(4, 2) *
        (LaurentHalf::one(4) +
         (LaurentHalf::one(4) - LaurentHalf::monomial(4, -4)).shifted(-8))
            .shifted(-4);
    CHECK(jones_trefoil(2, Chirality::Right) == expect);
    // mirror: left(q) = right(q^{-1}); trefoil is chiral at N=2
    for (long n = 2; n <= 5; ++n)
        CHECK(jones_trefoil(n, Chirality::Left) == jones_trefoil(n, Chirality::Right).mirrored());
    CHECK(jones_trefoil(2, Chirality::Right) != jones_trefoil(2, Chirality::Left));
}

TEST_CASE("figure eight is amphichiral") {
    CHECK(jones_fig8(1) == LaurentHalf::one(4));
    for (long n = 2; n <= 8; ++n) {
        LaurentHalf j = jones_fig8(n);
        CHECK(j == j.mirrored());
    }
}

TEST_CASE("braid engine reproduces the closed forms") {
    for (long n = 1; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(braid_jones_sl2(trefoil_braid(0), {n}) == jones_trefoil(n, Chirality::Right));
    }
    for (long n = 1; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(braid_jones_sl2(fig8_braid(0), {n}) == jones_fig8(n));
    }
}

TEST_CASE("braid engine: unknots, unlinks, hopf link") {
    // closure of the empty word on one strand: unknot, J = [N]
    BraidLink u{1, {}, {0}, {0}};
    for (long n = 1; n <= 5; ++n) CHECK(braid_jones_sl2(u, {n}) == quantum_integer(4, n));
    // two-component unlink: J = [N][M]
    BraidLink u2{2, {}, {0, 0}, {0, 1}};
    CHECK(braid_jones_sl2(u2, {3, 4}) == quantum_integer(4, 3) * quantum_integer(4, 4));
    // positive Hopf link as closure of sigma_1^2, distinct colors
    auto a1 = RootSystem::build("A1");
    BraidLink hopf{2, {1, 1}, {0, 0}, {0, 1}};
    for (long n = 1; n <= 4; ++n)
        for (long m = 1; m <= 4; ++m)
            CHECK(braid_jones_sl2(hopf, {n, m}) ==
                  hopf_entry(*a1, Weight({n}), Weight({m})));
}

TEST_CASE("braid engine: inverse crossings cancel") {
    // sigma sigma^{-1} closure = unlink
    BraidLink b{3, {1, -1, 2, -2}, {0, 0, 0}, {0, 1, 2}};
    CHECK(braid_jones_sl2(b, {2, 3, 4}) ==
          quantum_integer(4, 2) * quantum_integer(4, 3) * quantum_integer(4, 4));
    // conjugation invariance (Markov move 1): w vs g w g^{-1}
    BraidLink w1{2, {1, 1, 1}, {0}, {0, 0}};
    BraidLink w2{2, {-1, 1, 1, 1, 1}, {0}, {0, 0}};
    for (long n = 2; n <= 4; ++n) CHECK(braid_jones_sl2(w1, {n}) == braid_jones_sl2(w2, {n}));
}

TEST_CASE("linking matrices") {
    auto lk = make_hopf(2, 2).linking_matrix();
    CHECK(lk == std::vector<std::vector<long>>{{2, 1}, {1, 2}});
    // braid hopf with framings
    BraidLink hopf{2, {1, 1}, {3, -1}, {0, 1}};
    auto lk2 = FramedLink{hopf}.linking_matrix();
    CHECK(lk2 == std::vector<std::vector<long>>{{3, 1}, {1, -1}});
    // negative hopf braid
    BraidLink nhopf{2, {-1, -1}, {0, 0}, {0, 1}};
    auto lk3 = FramedLink{nhopf}.linking_matrix();
    CHECK(lk3[0][1] == -1);
}

TEST_CASE("braid validation") {
    CHECK_THROWS_AS(BraidLink({2, {3}, {0}, {0, 0}}).validate(), invalid_input_error);
    // component map splitting one knot into two
    CHECK_THROWS_AS(BraidLink({2, {1, 1, 1}, {0, 0}, {0, 1}}).validate(), invalid_input_error);
    // merged ids for distinct cycles
    CHECK_THROWS_AS(BraidLink({2, {1, 1}, {0}, {0, 0}}).validate(), invalid_input_error);
    // resource guard
    Limits tiny;
    tiny.max_braid_dim = 10;
    CHECK_THROWS_AS(braid_jones_sl2(fig8_braid(0), {4}, tiny), resource_error);
}

TEST_CASE("q_value framing shifts") {
    auto a1 = RootSystem::build("A1");
    // unknot with framing: q^{b(N^2-1)/4} [N]^2
    LaurentHalf q0 = q_value(*a1, make_unknot(0), {Weight({2})});
    CHECK(q0 == quantum_integer(4, 2) * quantum_integer(4, 2));
    LaurentHalf q1 = q_value(*a1, make_unknot(1), {Weight({2})});
    CHECK(q1 == q0.shifted(3)); // q^{3/4}
    // composition of framing shifts
    LaurentHalf v = framing_shift(*a1, q0, Weight({2}), 1);
    v = framing_shift(*a1, v, Weight({2}), 2);
    CHECK(v == framing_shift(*a1, q0, Weight({2}), 3));
    // braid path equals special path for the trefoil
    for (long n = 1; n <= 4; ++n) {
        LaurentHalf sp = q_value(*a1, make_trefoil(Chirality::Right, 1), {Weight({n})});
        LaurentHalf br = q_value(*a1, FramedLink{trefoil_braid(1)}, {Weight({n})});
        CHECK(sp == br);
    }
}

TEST_CASE("q_value Weyl extension and boundary") {
    auto a1 = RootSystem::build("A1");
    for (const FramedLink& link :
         {make_trefoil(Chirality::Left, 2), make_fig8(-1), make_unknot(3)}) {
        CHECK(q_value(*a1, link, {Weight({0})}).is_zero());
        CHECK(q_value(*a1, link, {Weight({-3})}) == q_value(*a1, link, {Weight({3})}));
    }
    auto a2 = RootSystem::build("A2");
    // component-wise Weyl invariance of the Hopf Q
    Weight mu({2, 1}), la({1, 3});
    Weight smu = a2->apply(a2->simple_reflection(0), mu);
    CHECK(q_value(*a2, make_hopf(0, 0), {smu, la}) == q_value(*a2, make_hopf(0, 0), {mu, la}));
}

TEST_CASE("integrality theorem for braid links") {
    auto a1 = RootSystem::build("A1");
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> color(1, 4);
    for (const BraidLink& b :
         {trefoil_braid(2), fig8_braid(-1), BraidLink{2, {1, 1}, {1, 3}, {0, 1}}}) {
        FramedLink link{b};
        std::vector<Weight> colors;
        for (int i = 0; i < link.component_count(); ++i) colors.push_back(Weight({color(rng)}));
        LaurentHalf q = q_value(*a1, link, colors);
        // q^{-p/2} Q in Z[q^{+-1}]: all exponents share the residue D*p mod 2D
        long pd = integrality_exponent_D(*a1, link, colors);
        long res = 0;
        REQUIRE(q.single_residue_mod_2d(res));
        CHECK(mod_nonneg(pd, 2 * a1->D()) == res);
        // root-lattice colors give integer powers
        std::vector<Weight> ycolors(colors.size(), Weight({3}));
        CHECK(q_value(*a1, link, ycolors).has_integer_q_powers());
    }
}

TEST_CASE("mirrored braid gives the left trefoil") {
    for (long n = 2; n <= 4; ++n) {
        BraidLink mirror{2, {-1, -1, -1}, {0}, {0, 0}};
        CHECK(braid_jones_sl2(mirror, {n}) == jones_trefoil(n, Chirality::Left));
    }
}

TEST_CASE("first symmetry principle") {
    auto a1 = RootSystem::build("A1");
    long r = 5;
    // trefoil: mu -> mu + r alpha (translation), reflection at the r-wall
    FramedLink tre = make_trefoil(Chirality::Right, 0);
    CHECK(symmetry1_check(*a1, r, 1, tre, {Weight({2})}, {Weight({2 + 2 * r})}));
    CHECK(symmetry1_check(*a1, r, 1, tre, {Weight({2})}, {Weight({2 * r - 2})}));
    CHECK(symmetry1_check(*a1, r, 3, tre, {Weight({3})}, {Weight({3 - 2 * r})}));
    // hopf with a reflected color
    FramedLink hopf = make_hopf(1, 0);
    CHECK(symmetry1_check(*a1, r, 1, hopf, {Weight({1}), Weight({2})},
                          {Weight({1}), Weight({2 * r - 2})}));
    // non-equivalent image must throw
    CHECK_THROWS_AS(symmetry1_check(*a1, r, 1, tre, {Weight({2})}, {Weight({3})}),
                    invalid_input_error);
    // boundary vanishing at q = zeta
    auto f = CycField::make(20);
    CHECK(evaluate(q_value(*a1, tre, {Weight({5})}), f, 1).is_zero());
    auto a2 = RootSystem::build("A2");
    LatticeDomain dom{a2.get(), r};
    FramedLink h2 = make_hopf(2, -1);
    Weight mu({1, 2}), la({2, 2});
    Weight img = affine_reduce(dom, mu + a2->simple_roots()[0].scaled(r)).rep;
    CHECK(symmetry1_check(*a2, r, 1, h2, {mu, la}, {img, la}));
}

TEST_CASE("second symmetry principle") {
    auto a1 = RootSystem::build("A1");
    long r = 5;
    auto gs = a1->center_elements();
    const CenterElement& e = gs[0].is_identity() ? gs[0] : gs[1];
    const CenterElement& g = gs[0].is_identity() ? gs[1] : gs[0];
    FramedLink hopf = make_hopf(1, 0);
    CHECK(symmetry2_check(*a1, r, 1, hopf, {Weight({1}), Weight({2})}, {e, e}));
    CHECK(symmetry2_check(*a1, r, 1, hopf, {Weight({1}), Weight({2})}, {g, e}));
    CHECK(symmetry2_check(*a1, r, 1, hopf, {Weight({2}), Weight({3})}, {g, g}));
    FramedLink tre = make_trefoil(Chirality::Left, -1);
    CHECK(symmetry2_check(*a1, r, 1, tre, {Weight({3})}, {g}));
    auto a2 = RootSystem::build("A2");
    auto gs2 = a2->center_elements();
    FramedLink u2 = make_unknot(2);
    for (const auto& g2 : gs2)
        CHECK(symmetry2_check(*a2, r, 1, u2, {Weight({1, 2})}, {g2}));
}
