#include <catch2/catch_amalgamated.hpp>

#include "qk/labels.hpp"

using namespace qk;

TEST_CASE("quaternionic dimension must be at least two") {
    CHECK_THROWS_AS(QuatDim(1), std::invalid_argument);
    CHECK_THROWS_AS(QuatDim(0), std::invalid_argument);
    CHECK(QuatDim(2).value() == 2);
}

TEST_CASE("weights validate, trim and pad") {
    CHECK(SpnWeight({2, 1, 0, 0}) == SpnWeight({2, 1}));
    CHECK(SpnWeight(std::vector<int>{}).length() == 0);
    CHECK_THROWS_AS(SpnWeight({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(SpnWeight({-1}), std::invalid_argument);
    CHECK(SpnWeight::two_column(3, 1).parts() == std::vector<int>{2, 1, 1});
    CHECK(SpnWeight::two_column(0, 0).length() == 0);
    CHECK_THROWS_AS(SpnWeight::two_column(1, 2), std::invalid_argument);
    CHECK(SpnWeight({2, 1}).padded(4) == std::vector<int>{2, 1, 0, 0});
    CHECK_THROWS_AS(SpnWeight({1, 1, 1}).padded(2), std::invalid_argument);
    CHECK(SpnWeight({2, 1}).str() == "(2,1)");
}

TEST_CASE("labels validate their ranges") {
    QuatDim n(3);
    CHECK_NOTHROW(IrrepLabel(n, 0, 3, 3));
    CHECK_THROWS_AS(IrrepLabel(n, -1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(IrrepLabel(n, 0, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(IrrepLabel(n, 0, 1, 2), std::invalid_argument);
    CHECK_NOTHROW(TwistLabel(n, 0, 3));
    CHECK_THROWS_AS(TwistLabel(n, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(TwistLabel(n, -1, 0), std::invalid_argument);
    CHECK(IrrepLabel(n, 1, 2, 1) < IrrepLabel(n, 1, 2, 2));
    CHECK(IrrepLabel(n, 1, 2, 1).str() == "(1,2,1)");
}

TEST_CASE("type-C dimension formula on known modules") {
    QuatDim n2(2), n3(3);
    CHECK(irrep_dimension(n2, SpnWeight(std::vector<int>{})) == 1);
    CHECK(irrep_dimension(n2, SpnWeight({1})) == 4);
    CHECK(irrep_dimension(n2, SpnWeight({1, 1})) == 5);
    CHECK(irrep_dimension(n2, SpnWeight({2})) == 10);
    CHECK(irrep_dimension(n2, SpnWeight({2, 2})) == 14);
    CHECK(irrep_dimension(n3, SpnWeight({1})) == 6);
    CHECK(irrep_dimension(n3, SpnWeight({1, 1})) == 14);
    CHECK(irrep_dimension(n3, SpnWeight({1, 1, 1})) == 14);
    CHECK(irrep_dimension(n3, SpnWeight({2})) == 21);
    CHECK(irrep_dimension(n3, SpnWeight({2, 2})) == 90);
    CHECK(irrep_dimension(n3, SpnWeight({2, 1, 1})) == 70);
    CHECK(sp1_dimension(3) == 4);
    CHECK_THROWS_AS(sp1_dimension(-1), std::invalid_argument);
    CHECK(irrep_dimension(n2, IrrepLabel(n2, 1, 1, 0)) == 8);
    CHECK(irrep_dimension(n2, IrrepLabel(n2, 2, 0, 0)) == 3);
}

TEST_CASE("label and weight conversions are mutually inverse") {
    QuatDim n(3);
    auto [k, w] = label_to_weight(IrrepLabel(n, 2, 2, 1));
    CHECK(k == 2);
    CHECK(w == SpnWeight({2, 1}));
    auto back = label_from_weight(n, 2, w);
    REQUIRE(back.has_value());
    CHECK(*back == IrrepLabel(n, 2, 2, 1));
    CHECK_FALSE(label_from_weight(n, 0, SpnWeight({3})).has_value());
    CHECK_FALSE(label_from_weight(n, -1, SpnWeight({1})).has_value());
    // the two bases of the two-column family
    CHECK(label_to_weight(IrrepLabel(n, 0, 1, 1)).second == SpnWeight({2}));
    CHECK(label_to_weight(IrrepLabel(n, 0, 2, 0)).second == SpnWeight({1, 1}));
}
