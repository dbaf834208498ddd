#include <catch2/catch_amalgamated.hpp>

#include "qk/operators.hpp"

using namespace qk;
using namespace qk::ops;

TEST_CASE("frame pairing and sign conventions") {
    SymplecticFrame fr(2);
    CHECK(fr.dim() == 4);
    CHECK(fr.partner(0) == 2);
    CHECK(fr.partner(3) == 1);
    CHECK(fr.sigma(0, 2) == 1);
    CHECK(fr.sigma(2, 0) == -1);
    CHECK(fr.sigma(0, 1) == 0);
    CHECK(fr.sigma(0, 0) == 0);
    // musical isomorphisms invert each other
    for (int i = 0; i < fr.dim(); ++i)
        CHECK(fr.sharp_sign(i) * fr.flat_sign(fr.partner(i)) == 1);
}

TEST_CASE("generator action matches sigma(x,v) y + sigma(y,v) x on vectors") {
    SymplecticFrame fr(2);
    ExteriorSpace sp(fr, 1);
    for (int i = 0; i < fr.dim(); ++i)
        for (int j = 0; j < fr.dim(); ++j) {
            RMatrix m = pair_action_matrix(sp, i, j);
            for (int v = 0; v < fr.dim(); ++v)
                for (int r = 0; r < fr.dim(); ++r) {
                    Rational want(0);
                    if (r == j)
                        want += Rational(fr.sigma(i, v));
                    if (r == i)
                        want += Rational(fr.sigma(j, v));
                    CHECK(m.at(r, v) == want);
                }
        }
}

TEST_CASE("symmetric-power action on a rank-one frame") {
    SymplecticFrame fr(1);
    SymmetricSpace sp(fr, 1);
    int ie = -1, iff = -1;
    for (int i = 0; i < sp.dim(); ++i) {
        if (sp.exponents(i) == std::vector<int>{1, 0})
            ie = i;
        if (sp.exponents(i) == std::vector<int>{0, 1})
            iff = i;
    }
    REQUIRE(ie >= 0);
    REQUIRE(iff >= 0);
    // (e1 e1) . f1 = 2 e1
    RMatrix m = pair_action_matrix(sp, 0, 0);
    CHECK(m.at(ie, iff) == Rational(2));
    CHECK(m.at(iff, ie) == Rational(0));
    CHECK(m.at(ie, ie) == Rational(0));
    // (e1 f1) . e1 = -e1, (e1 f1) . f1 = +f1
    RMatrix h = pair_action_matrix(sp, 0, 1);
    CHECK(h.at(ie, ie) == Rational(-1));
    CHECK(h.at(iff, iff) == Rational(1));
    CHECK(h.at(iff, ie) == Rational(0));
}

TEST_CASE("pair actions realize the sp bracket") {
    SymplecticFrame fr(2);
    auto check_space = [&](const auto& sp) {
        int N = fr.dim();
        for (int a = 0; a < N; ++a)
            for (int b = a; b < N; ++b)
                for (int c = 0; c < N; ++c)
                    for (int d = c; d < N; ++d) {
                        RMatrix A = pair_action_matrix(sp, a, b);
                        RMatrix B = pair_action_matrix(sp, c, d);
                        RMatrix lhs = A * B - B * A;
                        RMatrix rhs(sp.dim(), sp.dim());
                        for (auto [coef, x, y] : sym2_bracket(fr, a, b, c, d))
                            rhs = rhs + Rational(coef) * pair_action_matrix(sp, x, y);
                        CHECK(lhs == rhs);
                    }
    };
    check_space(ExteriorSpace(fr, 2));
    check_space(SymmetricSpace(fr, 2));
}

TEST_CASE("casimir matrices are scalar on irreducible model spaces") {
    SECTION("rank one, symmetric powers") {
        SymplecticFrame fr(1);
        for (int k = 0; k <= 4; ++k) {
            SymmetricSpace sp(fr, k);
            CHECK(sp_casimir_matrix(sp).is_scalar(sp1_casimir_scalar(k)));
        }
        CHECK(sp1_casimir_scalar(1) == Rational(-3, 2));
    }
    SECTION("defining module") {
        SymplecticFrame fr(2);
        ExteriorSpace sp(fr, 1);
        CHECK(sp_casimir_matrix(sp).is_scalar(casimir_ext_scalar(2, 1)));
        CHECK(casimir_ext_scalar(2, 1) == Rational(-5, 2));
    }
    SECTION("symmetric powers at rank two") {
        SymplecticFrame fr(2);
        for (int l = 0; l <= 3; ++l) {
            SymmetricSpace sp(fr, l);
            CHECK(sp_casimir_matrix(sp).is_scalar(casimir_sym_scalar(2, l)));
        }
    }
    SECTION("exterior square: scalar only on the primitive part") {
        SymplecticFrame fr(2);
        ExteriorSpace sp(fr, 2);
        RMatrix cas = sp_casimir_matrix(sp);
        CHECK_FALSE(cas.is_scalar(casimir_ext_scalar(2, 2)));
        Rational want = casimir_ext_scalar(2, 2);
        for (const auto& v : primitive_basis(fr, 2)) {
            auto got = cas.apply(v);
            for (int r = 0; r < sp.dim(); ++r)
                CHECK(got[r] == want * v[r]);
        }
        // the symplectic form itself is annihilated
        std::vector<Rational> omega(sp.dim());
        for (int i = 0; i < 2; ++i)
            omega[sp.index_of((1u << i) | (1u << (i + 2)))] = 1;
        for (const Rational& x : cas.apply(omega))
            CHECK(x == Rational(0));
    }
}

TEST_CASE("casimir commutes with every generator") {
    SymplecticFrame fr(2);
    ExteriorSpace ext(fr, 2);
    RMatrix cas = sp_casimir_matrix(ext);
    for (int i = 0; i < fr.dim(); ++i)
        for (int j = i; j < fr.dim(); ++j)
            CHECK(commutes_with_pair_action(ext, i, j, cas));
    SymmetricSpace sym(fr, 2);
    RMatrix cas2 = sp_casimir_matrix(sym);
    for (int i = 0; i < fr.dim(); ++i)
        for (int j = i; j < fr.dim(); ++j)
            CHECK(commutes_with_pair_action(sym, i, j, cas2));
}

TEST_CASE("sigma contraction and the primitive subspace") {
    SymplecticFrame fr2(2), fr3(3);
    CHECK(primitive_basis(fr2, 0).size() == 1);
    CHECK(primitive_basis(fr2, 1).size() == 4);
    CHECK(primitive_basis(fr2, 2).size() == 5);  // 6 - 1
    CHECK(primitive_basis(fr3, 2).size() == 14); // 15 - 1
    CHECK(primitive_basis(fr3, 3).size() == 14); // 20 - 6
    CHECK_THROWS_AS(sigma_contraction_matrix(fr2, 1), std::invalid_argument);

    // contraction of e1 ^ f1 is the empty form with coefficient 1
    RMatrix c = sigma_contraction_matrix(fr2, 2);
    ExteriorSpace sp(fr2, 2);
    CHECK(c.at(0, sp.index_of((1u << 0) | (1u << 2))) == Rational(1));
    CHECK(c.at(0, sp.index_of((1u << 0) | (1u << 1))) == Rational(0));

    // the symplectic form contracts to the frame rank
    std::vector<Rational> omega(sp.dim());
    for (int i = 0; i < 2; ++i)
        omega[sp.index_of((1u << i) | (1u << (i + 2)))] = 1;
    CHECK(c.apply(omega)[0] == Rational(2));
}

TEST_CASE("the quartic term vanishes while its square factor does not") {
    SymplecticFrame fr(2);
    ExteriorSpace sp(fr, 2);

    std::vector<Rational> e1(fr.dim());
    e1[0] = 1;
    RMatrix h = half_square_matrix(sp, e1);
    // (1/2 e1^2) . (f1 ^ f2) = e1 ^ f2
    CHECK(h.at(sp.index_of((1u << 0) | (1u << 3)),
               sp.index_of((1u << 2) | (1u << 3))) == Rational(1));
    CHECK_FALSE(h.is_zero());
    CHECK(hyper_term_matrix(sp, e1).is_zero());

    for (const auto& e : polarization_family(fr))
        for (int d = 0; d <= fr.dim(); ++d)
            CHECK(hyper_term_matrix(ExteriorSpace(fr, d), e).is_zero());
}

TEST_CASE("polarization family spans basis vectors and pairwise sums") {
    SymplecticFrame fr(2);
    auto fam = polarization_family(fr);
    CHECK(fam.size() == 4 + 6);
    CHECK(fam[0][0] == Rational(1));
    CHECK(fam[4][0] == Rational(1));
    CHECK(fam[4][1] == Rational(1));
}

TEST_CASE("kernel basis solves small systems") {
    RMatrix m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 2) = 1;
    m.at(1, 1) = 1;
    auto basis = kernel_basis(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0][0] == Rational(-1));
    CHECK(basis[0][1] == Rational(0));
    CHECK(basis[0][2] == Rational(1));
    CHECK(kernel_basis(RMatrix::identity(3)).empty());
}
