#include <catch2/catch_amalgamated.hpp>

#include "qk/weyl.hpp"

using namespace qk;
using namespace qk::weyl;

TEST_CASE("freudenthal weights of small Sp(4) modules") {
    WeylOracle sp2(ProductGroup{{2}});
    auto e = sp2.irrep_weights({1, 0});
    CHECK(WeylOracle::mass(e) == 4);
    CHECK(e.at({1, 0}) == 1);
    CHECK(e.at({0, -1}) == 1);

    auto adjoint = sp2.irrep_weights({2, 0});
    CHECK(WeylOracle::mass(adjoint) == 10);
    CHECK(adjoint.at({0, 0}) == 2);
    CHECK(adjoint.at({2, 0}) == 1);
    CHECK(adjoint.at({1, 1}) == 1);
    CHECK(adjoint.at({1, -1}) == 1);

    // (2,2) has a doubled zero weight; everything else is multiplicity one.
    auto w22 = sp2.irrep_weights({2, 2});
    CHECK(WeylOracle::mass(w22) == 14);
    CHECK(w22.at({0, 0}) == 2);
    CHECK(w22.at({2, 0}) == 1);
    CHECK(w22.at({1, 1}) == 1);
    CHECK(w22.at({2, 2}) == 1);
}

TEST_CASE("weight count equals the dimension formula") {
    WeylOracle sp3(ProductGroup{{3}});
    for (WeightVec hw : {WeightVec{1, 0, 0}, WeightVec{1, 1, 0}, WeightVec{1, 1, 1},
                         WeightVec{2, 0, 0}, WeightVec{2, 1, 0}, WeightVec{2, 2, 1},
                         WeightVec{3, 1, 0}})
        CHECK(sp3.irrep_dim(hw) == WeylOracle::mass(sp3.irrep_weights(hw)));
}

TEST_CASE("tensor products by convolution match known decompositions") {
    WeylOracle sp3(ProductGroup{{3}});
    auto vc = sp3.tensor(irrep_character({1, 0, 0}), irrep_character({1, 0, 0}));
    VirtualCharacter want{{{2, 0, 0}, 1}, {{1, 1, 0}, 1}, {{0, 0, 0}, 1}};
    CHECK(vc == want);
    CHECK(sp3.dim(vc) == 36);

    WeylOracle sp2(ProductGroup{{2}});
    auto sq = sp2.tensor(irrep_character({1, 1}), irrep_character({1, 1}));
    VirtualCharacter want2{{{2, 2}, 1}, {{2, 0}, 1}, {{0, 0}, 1}};
    CHECK(sq == want2);
}

TEST_CASE("decomposing a non-invariant multiset fails loudly") {
    WeylOracle sp2(ProductGroup{{2}});
    WeightMultiset bad{{{1, 0}, 1}};
    CHECK_THROWS_AS(sp2.decompose(bad), std::invalid_argument);
    // round trip on a genuine character
    auto ch = sp2.irrep_weights({2, 1});
    auto vc = sp2.decompose(ch);
    CHECK(vc == VirtualCharacter{{{2, 1}, 1}});
}

TEST_CASE("exterior powers follow the k-subset expansion") {
    WeylOracle sp2(ProductGroup{{2}});
    auto e = sp2.irrep_weights({1, 0});
    CHECK(WeylOracle::mass(WeylOracle::exterior_power(e, 2)) == 6);
    CHECK(WeylOracle::mass(WeylOracle::exterior_power(e, 0)) == 1);
    CHECK(WeylOracle::mass(WeylOracle::exterior_power(e, 4)) == 1);
    CHECK_THROWS_AS(WeylOracle::exterior_power(e, 5), std::invalid_argument);
    CHECK_THROWS_AS(WeylOracle::exterior_power(e, -1), std::invalid_argument);
    WeightMultiset neg{{{0, 0}, -1}};
    CHECK_THROWS_AS(WeylOracle::exterior_power(neg, 1), std::invalid_argument);
    // Lambda^2 E = Lambda^2_0 E + trivial
    auto l2 = sp2.decompose(WeylOracle::exterior_power(e, 2));
    CHECK(l2 == VirtualCharacter{{{1, 1}, 1}, {{0, 0}, 1}});
}

TEST_CASE("product groups concatenate factor coordinates") {
    WeylOracle g(ProductGroup{{1, 2}});
    CHECK(g.irrep_dim({3, 1, 0}) == 16);
    CHECK(g.is_dominant({2, 1, 1}));
    CHECK_FALSE(g.is_dominant({2, 1, 2}));
    CHECK_FALSE(g.is_dominant({-1, 1, 0}));
    auto w = g.irrep_weights({1, 1, 0});
    CHECK(WeylOracle::mass(w) == 8);
    CHECK(w.at({-1, 0, 1}) == 1);
}

TEST_CASE("two-forms of the model cotangent space decompose as expected") {
    QuatDim n(2);
    WeylOracle oracle(sp1xspn_group(n));
    CHECK(WeylOracle::mass(hxe_weights(n)) == 8);
    auto vc = oracle.decompose(WeylOracle::exterior_power(hxe_weights(n), 2));
    VirtualCharacter want{
        {{0, 2, 0}, 1}, // Sym^2 E
        {{2, 0, 0}, 1}, // Sym^2 H
        {{2, 1, 1}, 1}, // Sym^2 H (x) Lambda^2_0 E
    };
    CHECK(vc == want);
    CHECK(oracle.dim(vc) == 28);
}

TEST_CASE("middle forms at n = 2 contain the trivial type exactly once") {
    QuatDim n(2);
    WeylOracle oracle(sp1xspn_group(n));
    auto vc = oracle.decompose(WeylOracle::exterior_power(hxe_weights(n), 4));
    CHECK(oracle.dim(vc) == 70);
    CHECK(vc.at({0, 0, 0}) == 1); // oracle value, frozen
    CHECK(vc.at({0, 1, 1}) == 1);
    CHECK(vc.at({0, 2, 2}) == 1);
    CHECK(vc.at({4, 0, 0}) == 1);
    CHECK(vc.at({2, 2, 0}) == 1);
    CHECK(vc.at({2, 1, 1}) == 1);
    CHECK(vc.size() == 6);
}

TEST_CASE("spinor characters split into half spinors") {
    for (int nv : {2, 3, 4}) {
        QuatDim n(nv);
        WeylOracle oracle(sp1xspn_group(n));
        CHECK(oracle.dim(spinor_character(n)) == 1LL << (2 * nv));
        auto sp = half_spinor_character(n, true);
        auto sm = half_spinor_character(n, false);
        CHECK(oracle.dim(sp) + oracle.dim(sm) == 1LL << (2 * nv));
        for (const auto& [hw, m] : sm)
            CHECK(sp.count(hw) == 0);
    }
    // n = 2: S = Lambda^2_0 E + H (x) E + Sym^2 H, dims 5 + 8 + 3
    QuatDim n2(2);
    WeylOracle o2(sp1xspn_group(n2));
    auto s = spinor_character(n2);
    CHECK(s == VirtualCharacter{{{0, 1, 1}, 1}, {{1, 1, 0}, 1}, {{2, 0, 0}, 1}});
    CHECK(o2.dim(half_spinor_character(n2, true)) == 8);
    CHECK(o2.dim(half_spinor_character(n2, false)) == 8);
}

TEST_CASE("label bridges produce the right product weights") {
    QuatDim n(3);
    CHECK(product_hw(n, IrrepLabel(n, 2, 2, 1)) == WeightVec{2, 2, 1, 0});
    CHECK(product_hw(n, TwistLabel(n, 1, 2)) == WeightVec{1, 1, 1, 0});
    CHECK(product_hw(n, 0, SpnWeight(std::vector<int>{})) == WeightVec{0, 0, 0, 0});
    CHECK(WeylOracle(sp1xspn_group(n)).is_dominant(product_hw(n, IrrepLabel(n, 0, 3, 3))));
    CHECK(WeylOracle::mass(hxe_weights(n)) == 12);
}
