#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "qk/cohomology.hpp"

using namespace qk;
using namespace qk::cohomology;

TEST_CASE("embedding degrees of the invariant and exceptional families") {
    QuatDim n2(2), n3(3);
    CHECK(sp1_degrees(n2, 0) == std::vector<int>{0, 4, 8});
    CHECK(sp1_degrees(n2, 1) == std::vector<int>{2, 6});
    CHECK(sp1_degrees(n2, 2) == std::vector<int>{4});
    CHECK(sp1_degrees(n3, 1) == std::vector<int>{2, 6, 10});
    CHECK(exceptional_degrees(n3, 2, 1) == std::vector<int>{5, 7});
    CHECK(exceptional_degrees(n2, 2, 0) == std::vector<int>{2, 4, 6});
    CHECK(exceptional_degrees(n2, 1, 1) == std::vector<int>{4});
}

TEST_CASE("harmonic candidate lists") {
    QuatDim n(2);
    auto pos = harmonic_candidates(n, twist::Regime::positive);
    REQUIRE(pos.size() == 3);
    for (int a = 0; a <= 2; ++a) {
        CHECK(pos[a].rep == IrrepLabel(n, 0, a, a));
        CHECK(pos[a].family == Family::sp1_invariant);
        CHECK(pos[a].degrees == sp1_degrees(n, a));
    }
    auto neg = harmonic_candidates(n, twist::Regime::negative);
    CHECK(neg.size() == 3 + 5); // b < n excludes (a,b) = (2,2)
    int exceptional = 0;
    for (const auto& c : neg)
        if (c.family == Family::exceptional) {
            ++exceptional;
            CHECK(c.rep.k() == 2 * 2 - c.rep.a() - c.rep.b());
            CHECK(c.rep.b() < 2);
        }
    CHECK(exceptional == 5);
}

TEST_CASE("form decomposition bookkeeping at n = 2") {
    QuatDim n(2);
    weyl::WeylOracle oracle(weyl::sp1xspn_group(n));
    long long total = 0;
    for (int k = 0; k <= 8; ++k)
        total += oracle.dim(forms_decomposition(n, k, oracle));
    CHECK(total == 256);

    // degree lists of the invariant family, against the oracle
    for (int a = 0; a <= 2; ++a) {
        auto hw = weyl::product_hw(n, IrrepLabel(n, 0, a, a));
        std::vector<int> found;
        for (int k = 0; k <= 8; ++k) {
            auto vc = forms_decomposition(n, k, oracle);
            auto it = vc.find(hw);
            if (it != vc.end()) {
                CHECK(it->second == 1);
                found.push_back(k);
            }
        }
        CHECK(found == sp1_degrees(n, a));
    }
}

TEST_CASE("total form multiplicity from the interval formula") {
    QuatDim n(2);
    CHECK(total_multiplicity_in_forms(n, IrrepLabel(n, 0, 0, 0)) == 3);
    CHECK(total_multiplicity_in_forms(n, IrrepLabel(n, 0, 1, 1)) == 2);
    CHECK(total_multiplicity_in_forms(n, IrrepLabel(n, 1, 1, 0)) == 4);
    CHECK(total_multiplicity_in_forms(n, IrrepLabel(n, 0, 2, 2)) == 1);
    // too much Sym^k H to fit in 8 form degrees
    CHECK(total_multiplicity_in_forms(n, IrrepLabel(n, 5, 0, 0)) == 0);
}

TEST_CASE("betti tables store, serialize and parse") {
    QuatDim n(2);
    BettiTable t(n);
    CHECK(t.max_degree() == 8);
    t.set(0, 1, 0);
    t.add(4, 1, 1);
    t.add(4, 1, 0);
    CHECK(t.sp1(4) == 2);
    CHECK(t.expt(4) == 1);
    CHECK(t.total(4) == 3);
    CHECK(t.total(100) == 0);
    CHECK_THROWS_AS(t.set(9, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(t.set(0, -1, 0), std::invalid_argument);

    std::istringstream round(t.to_csv());
    BettiTable back = BettiTable::from_csv(round, n);
    for (int k = 0; k <= 8; ++k) {
        CHECK(back.sp1(k) == t.sp1(k));
        CHECK(back.expt(k) == t.expt(k));
    }

    std::istringstream plain("0,1,0\n4,2,1\n");
    BettiTable p = BettiTable::from_csv(plain, n);
    CHECK(p.sp1(0) == 1);
    CHECK(p.expt(4) == 1);
    CHECK(p.sp1(2) == 0);

    std::istringstream bad1("0,1\n");
    CHECK_THROWS_AS(BettiTable::from_csv(bad1, n), std::invalid_argument);
    std::istringstream bad2("0,1,0,9\n");
    CHECK_THROWS_AS(BettiTable::from_csv(bad2, n), std::invalid_argument);
    std::istringstream bad3("0,1,0\n0,2,0\n");
    CHECK_THROWS_AS(BettiTable::from_csv(bad3, n), std::invalid_argument);
    std::istringstream bad4("12,0,0\n");
    CHECK_THROWS_AS(BettiTable::from_csv(bad4, n), std::invalid_argument);
    std::istringstream bad5("degree,b_sp1,b_expt\n1,x,0\n");
    CHECK_THROWS_AS(BettiTable::from_csv(bad5, n), std::invalid_argument);
}

TEST_CASE("positive-regime constraints") {
    QuatDim n(2);
    BettiTable good(n);
    good.set(0, 1, 0);
    good.set(4, 2, 0);
    good.set(8, 1, 0);
    auto check = betti_constraints(n, twist::Regime::positive, good);
    CHECK(check.consistent);
    CHECK(check.violations.empty());
    CHECK(check.warnings.empty());

    BettiTable odd(n);
    odd.set(3, 1, 0);
    auto c1 = betti_constraints(n, twist::Regime::positive, odd);
    CHECK_FALSE(c1.consistent);
    REQUIRE_FALSE(c1.violations.empty());
    bool saw = false;
    for (const auto& v : c1.violations)
        if (v.constraint == "odd_betti_vanishes" && v.degree == 3)
            saw = true;
    CHECK(saw);

    BettiTable expt(n);
    expt.set(2, 0, 1);
    auto c2 = betti_constraints(n, twist::Regime::positive, expt);
    saw = false;
    for (const auto& v : c2.violations)
        if (v.constraint == "no_exceptional_classes")
            saw = true;
    CHECK(saw);

    BettiTable descend(n);
    descend.set(0, 2, 0);
    descend.set(8, 2, 0);
    descend.set(4, 1, 0);
    auto c3 = betti_constraints(n, twist::Regime::positive, descend);
    saw = false;
    for (const auto& v : c3.violations)
        if (v.constraint == "even_betti_ascend_step4" && v.degree == 4)
            saw = true;
    CHECK(saw);
    CHECK(c3.warnings.empty()); // table is Poincare symmetric
}

TEST_CASE("negative-regime constraints") {
    QuatDim n(2);
    BettiTable t(n);
    t.set(1, 1, 0); // odd sp1 class: two violations (parity and low-degree)
    t.set(0, 0, 1); // exceptional class below degree n
    auto check = betti_constraints(n, twist::Regime::negative, t);
    CHECK_FALSE(check.consistent);
    int sp1_odd = 0, low_expt = 0, low_odd = 0;
    for (const auto& v : check.violations) {
        if (v.constraint == "sp1_odd_vanishes")
            ++sp1_odd;
        if (v.constraint == "exceptional_low_degree_vanishes")
            ++low_expt;
        if (v.constraint == "low_odd_betti_vanishes")
            ++low_odd;
    }
    CHECK(sp1_odd == 1);
    CHECK(low_expt == 1);
    CHECK(low_odd == 1);

    BettiTable mono(n);
    mono.set(0, 2, 0);
    mono.set(4, 1, 0);
    auto c2 = betti_constraints(n, twist::Regime::negative, mono);
    bool saw = false;
    for (const auto& v : c2.violations)
        if (v.constraint == "sp1_ascend_step4" && v.degree == 0)
            saw = true;
    CHECK(saw);

    BettiTable mono2(n);
    mono2.set(2, 0, 2);
    mono2.set(4, 0, 1);
    auto c3 = betti_constraints(n, twist::Regime::negative, mono2);
    saw = false;
    for (const auto& v : c3.violations)
        if (v.constraint == "exceptional_ascend_step2" && v.degree == 2)
            saw = true;
    CHECK(saw);
}

TEST_CASE("poincare asymmetry is a warning, not a violation") {
    QuatDim n(2);
    BettiTable t(n);
    t.set(0, 1, 0);
    t.set(4, 2, 0); // keeps b_0 <= b_4, so monotonicity holds
    auto check = betti_constraints(n, twist::Regime::positive, t);
    CHECK(check.consistent); // b_0 != b_8 only warns
    REQUIRE_FALSE(check.warnings.empty());
    CHECK(check.warnings[0].constraint == "poincare_symmetry");
}

TEST_CASE("betti tables from kernel dimensions") {
    QuatDim n(2);
    std::map<IrrepLabel, long long> dims;
    dims.emplace(IrrepLabel(n, 0, 0, 0), 1);
    dims.emplace(IrrepLabel(n, 0, 1, 1), 3);
    dims.emplace(IrrepLabel(n, 2, 2, 0), 2); // exceptional: k = 2n-a-b
    BettiTable t = betti_from_kernel_dims(n, dims);
    CHECK(t.sp1(0) == 1);
    CHECK(t.sp1(4) == 1);
    CHECK(t.sp1(8) == 1);
    CHECK(t.sp1(2) == 3);
    CHECK(t.sp1(6) == 3);
    CHECK(t.expt(2) == 2);
    CHECK(t.expt(4) == 2);
    CHECK(t.expt(6) == 2);

    for (auto reg : {twist::Regime::negative})
        CHECK(betti_constraints(n, reg, t).consistent);

    std::map<IrrepLabel, long long> bad;
    bad.emplace(IrrepLabel(n, 1, 0, 0), 1);
    CHECK_THROWS_AS(betti_from_kernel_dims(n, bad), std::invalid_argument);
    std::map<IrrepLabel, long long> negd;
    negd.emplace(IrrepLabel(n, 0, 0, 0), -1);
    CHECK_THROWS_AS(betti_from_kernel_dims(n, negd), std::invalid_argument);
}
