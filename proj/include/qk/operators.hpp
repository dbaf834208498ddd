#pragma once

#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "qk/matrix.hpp"
#include "qk/rational.hpp"

// Finite-dimensional sp(2n) = Sym^2 E operator models on Lambda^d E and
// Sym^l E, built from a symplectic frame.  Everything is assembled from the
// generator action
//     (x y) . v = sigma(x, v) y + sigma(y, v) x,   x, y, v in E,
// extended as a derivation, so the curvature-normalized Casimir
//     q(R^E) = 1/4 sum_{mu,nu} (flat(dual mu) flat(dual nu)) . (v_mu v_nu) .
// and the quartic curvature term are computed, not postulated.

namespace qk::ops {

// Basis of E = C^{2n}: index i in [0,n) is e_{i+1}, index n+i is f_{i+1},
// with sigma(e_i, f_j) = delta_ij and sigma(e,e) = sigma(f,f) = 0.
class SymplecticFrame {
public:
    explicit SymplecticFrame(int n) : n_(n) {
        if (n < 1)
            throw std::invalid_argument("frame rank must be positive");
    }

    int n() const { return n_; }
    int dim() const { return 2 * n_; }
    int partner(int i) const { return i < n_ ? i + n_ : i - n_; }

    int sigma(int i, int j) const {
        if (j == partner(i))
            return i < n_ ? 1 : -1;
        return 0;
    }

    // v_i# = sigma(v_i, .) = sharp_sign(i) * dual(partner(i)).
    int sharp_sign(int i) const { return i < n_ ? 1 : -1; }

    // flat(dual(v_i)) = flat_sign(i) * v_partner(i), the inverse of #.
    int flat_sign(int i) const { return i < n_ ? -1 : 1; }

private:
    int n_;
};

// Sparse column: (basis index, integer coefficient) terms.
using Terms = std::vector<std::pair<int, long long>>;

// Lambda^d E over bitmask monomials (bit i = v_i present), increasing mask
// order.  Wedge/contraction signs count set bits below the touched index.
class ExteriorSpace {
public:
    ExteriorSpace(SymplecticFrame frame, int d) : frame_(frame), d_(d) {
        if (d < 0 || d > frame.dim())
            throw std::invalid_argument("exterior degree out of range");
        unsigned top = 1u << frame.dim();
        for (unsigned m = 0; m < top; ++m)
            if (__builtin_popcount(m) == d) {
                index_[m] = static_cast<int>(basis_.size());
                basis_.push_back(m);
            }
    }

    const SymplecticFrame& frame() const { return frame_; }
    int degree() const { return d_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    unsigned mask(int idx) const { return basis_[idx]; }
    int index_of(unsigned m) const { return index_.at(m); }

    static int sign_below(unsigned m, int i) {
        return __builtin_popcount(m & ((1u << i) - 1)) % 2 == 0 ? 1 : -1;
    }

    // v_i wedge: 0 if present, else insert with position sign.
    static bool wedge(unsigned m, int i, unsigned& out, int& sign) {
        if (m & (1u << i))
            return false;
        sign = sign_below(m, i);
        out = m | (1u << i);
        return true;
    }

    // dual(v_i) contraction: 0 if absent, else remove with position sign.
    static bool contract(unsigned m, int i, unsigned& out, int& sign) {
        if (!(m & (1u << i)))
            return false;
        sign = sign_below(m, i);
        out = m & ~(1u << i);
        return true;
    }

    // (v_i v_j) . = v_i ^ (v_j# contraction) + v_j ^ (v_i# contraction).
    void apply_pair(int i, int j, int idx, Terms& out) const {
        unsigned m = basis_[idx];
        auto half = [&](int wi, int ci) {
            unsigned m1;
            int s1, s2;
            if (!contract(m, frame_.partner(ci), m1, s1))
                return;
            unsigned m2;
            if (!wedge(m1, wi, m2, s2))
                return;
            out.emplace_back(index_.at(m2),
                             static_cast<long long>(frame_.sharp_sign(ci)) * s1 * s2);
        };
        half(i, j);
        half(j, i);
    }

private:
    SymplecticFrame frame_;
    int d_;
    std::vector<unsigned> basis_;
    std::map<unsigned, int> index_;
};

// Sym^l E over exponent-vector monomials in lexicographic order.
class SymmetricSpace {
public:
    SymmetricSpace(SymplecticFrame frame, int l) : frame_(frame), l_(l) {
        if (l < 0)
            throw std::invalid_argument("symmetric degree out of range");
        std::vector<int> exp(frame.dim(), 0);
        auto rec = [&](auto&& self, int pos, int left) -> void {
            if (pos == frame.dim() - 1) {
                exp[pos] = left;
                index_[exp] = static_cast<int>(basis_.size());
                basis_.push_back(exp);
                return;
            }
            for (int v = 0; v <= left; ++v) {
                exp[pos] = v;
                self(self, pos + 1, left - v);
            }
        };
        rec(rec, 0, l);
    }

    const SymplecticFrame& frame() const { return frame_; }
    int degree() const { return l_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<int>& exponents(int idx) const { return basis_[idx]; }

    // (v_i v_j) . = v_i * (v_j# directional derivative) + (i <-> j); the
    // derivative of a monomial along dual(v_p) carries its exponent.
    void apply_pair(int i, int j, int idx, Terms& out) const {
        auto half = [&](int wi, int ci) {
            int p = frame_.partner(ci);
            const std::vector<int>& x = basis_[idx];
            if (x[p] == 0)
                return;
            std::vector<int> y = x;
            --y[p];
            ++y[wi];
            out.emplace_back(index_.at(y),
                             static_cast<long long>(frame_.sharp_sign(ci)) * x[p]);
        };
        half(i, j);
        half(j, i);
    }

private:
    SymplecticFrame frame_;
    int l_;
    std::vector<std::vector<int>> basis_;
    std::map<std::vector<int>, int> index_;
};

template <class Space>
RMatrix pair_action_matrix(const Space& sp, int i, int j) {
    RMatrix out(sp.dim(), sp.dim());
    Terms t;
    for (int col = 0; col < sp.dim(); ++col) {
        t.clear();
        sp.apply_pair(i, j, col, t);
        for (const auto& [row, c] : t)
            out.at(row, col) += Rational(c);
    }
    return out;
}

// sp(2n) bracket on generators:
// [v_a v_b, v_c v_d] = s(a,c) bd + s(a,d) bc + s(b,c) ad + s(b,d) ac.
inline std::vector<std::tuple<long long, int, int>>
sym2_bracket(const SymplecticFrame& fr, int a, int b, int c, int d) {
    std::vector<std::tuple<long long, int, int>> out;
    auto add = [&](int s, int x, int y) {
        if (s != 0)
            out.emplace_back(s, x, y);
    };
    add(fr.sigma(a, c), b, d);
    add(fr.sigma(a, d), b, c);
    add(fr.sigma(b, c), a, d);
    add(fr.sigma(b, d), a, c);
    return out;
}

// q(R^E) assembled from the frame; scalar on irreducible summands.
template <class Space>
RMatrix sp_casimir_matrix(const Space& sp) {
    const SymplecticFrame& fr = sp.frame();
    int N = fr.dim();
    RMatrix out(sp.dim(), sp.dim());
    Terms t1, t2;
    for (int col = 0; col < sp.dim(); ++col)
        for (int mu = 0; mu < N; ++mu)
            for (int nu = 0; nu < N; ++nu) {
                t1.clear();
                sp.apply_pair(mu, nu, col, t1);
                if (t1.empty())
                    continue;
                long long fs =
                    static_cast<long long>(fr.flat_sign(mu)) * fr.flat_sign(nu);
                int pmu = fr.partner(mu), pnu = fr.partner(nu);
                for (const auto& [i1, c1] : t1) {
                    t2.clear();
                    sp.apply_pair(pmu, pnu, i1, t2);
                    for (const auto& [i2, c2] : t2)
                        out.at(i2, col) += Rational(fs * c1 * c2, 4);
                }
            }
    return out;
}

// Closed-form Casimir eigenvalues the matrices are tested against.
inline Rational casimir_sym_scalar(int n, int l) {
    return Rational(-static_cast<long long>(l) * (2 * n + l), 2);
}
inline Rational casimir_ext_scalar(int n, int d) {
    return Rational(-static_cast<long long>(d) * (2 * n - d + 2), 2);
}
// q(R^H) on Sym^k H; the rank-one frame model reproduces it exactly.
inline Rational sp1_casimir_scalar(int k) {
    return Rational(-static_cast<long long>(k) * (2 + k), 2);
}

// (1/2 e^2) . = e ^ (e# contraction) on Lambda E, for e = sum coeffs[i] v_i.
inline RMatrix half_square_matrix(const ExteriorSpace& sp,
                                  const std::vector<Rational>& coeffs) {
    const SymplecticFrame& fr = sp.frame();
    if (static_cast<int>(coeffs.size()) != fr.dim())
        throw std::invalid_argument("coefficient vector length mismatch");
    RMatrix out(sp.dim(), sp.dim());
    for (int col = 0; col < sp.dim(); ++col) {
        unsigned m = sp.mask(col);
        for (int nu = 0; nu < fr.dim(); ++nu) {
            if (coeffs[nu].is_zero())
                continue;
            unsigned m1;
            int s1;
            if (!ExteriorSpace::contract(m, fr.partner(nu), m1, s1))
                continue;
            Rational c1 = coeffs[nu] * Rational(fr.sharp_sign(nu) * s1);
            for (int mu = 0; mu < fr.dim(); ++mu) {
                if (coeffs[mu].is_zero())
                    continue;
                unsigned m2;
                int s2;
                if (!ExteriorSpace::wedge(m1, mu, m2, s2))
                    continue;
                out.at(sp.index_of(m2), col) += coeffs[mu] * c1 * Rational(s2);
            }
        }
    }
    return out;
}

// Quartic curvature term q(e^4 / 24) = 1/2 ((1/2 e^2).)^2; identically zero
// on Lambda E because the composition wedges e twice, while the single
// factor (1/2 e^2). is generically nonzero.
inline RMatrix hyper_term_matrix(const ExteriorSpace& sp,
                                 const std::vector<Rational>& coeffs) {
    RMatrix h = half_square_matrix(sp, coeffs);
    return Rational(1, 2) * (h * h);
}

// {basis vectors} and {pairwise sums}: enough polarizations to pin down a
// symmetric quartic form, used to probe hyper_term_matrix.
inline std::vector<std::vector<Rational>>
polarization_family(const SymplecticFrame& fr) {
    std::vector<std::vector<Rational>> fam;
    for (int i = 0; i < fr.dim(); ++i) {
        std::vector<Rational> e(fr.dim());
        e[i] = 1;
        fam.push_back(std::move(e));
    }
    for (int i = 0; i < fr.dim(); ++i)
        for (int j = i + 1; j < fr.dim(); ++j) {
            std::vector<Rational> e(fr.dim());
            e[i] = 1;
            e[j] = 1;
            fam.push_back(std::move(e));
        }
    return fam;
}

// Contraction with the symplectic form, Lambda^d E -> Lambda^{d-2} E:
// pairs of factors are contracted through sigma with alternating-position
// signs.  Its kernel is the primitive subspace Lambda^d_0 E.
inline RMatrix sigma_contraction_matrix(const SymplecticFrame& fr, int d) {
    if (d < 2)
        throw std::invalid_argument("sigma contraction needs degree >= 2");
    ExteriorSpace from(fr, d), to(fr, d - 2);
    RMatrix out(to.dim(), from.dim());
    for (int col = 0; col < from.dim(); ++col) {
        unsigned m = from.mask(col);
        for (int i = 0; i < fr.dim(); ++i) {
            if (!(m & (1u << i)))
                continue;
            int j = fr.partner(i);
            if (j < i || !(m & (1u << j)))
                continue;
            unsigned m1, m2;
            int s1, s2;
            ExteriorSpace::contract(m, i, m1, s1);
            ExteriorSpace::contract(m1, j, m2, s2);
            out.at(to.index_of(m2), col) +=
                Rational(static_cast<long long>(fr.sigma(i, j)) * s1 * s2);
        }
    }
    return out;
}

// Basis of Lambda^d_0 E inside Lambda^d E coordinates.
inline std::vector<std::vector<Rational>>
primitive_basis(const SymplecticFrame& fr, int d) {
    ExteriorSpace sp(fr, d);
    if (d < 2) {
        std::vector<std::vector<Rational>> basis;
        for (int i = 0; i < sp.dim(); ++i) {
            std::vector<Rational> v(sp.dim());
            v[i] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    return kernel_basis(sigma_contraction_matrix(fr, d));
}

// [pair(i,j), M] column by column, without forming the dense products.
template <class Space>
bool commutes_with_pair_action(const Space& sp, int i, int j, const RMatrix& M) {
    int dim = sp.dim();
    Terms t;
    for (int col = 0; col < dim; ++col) {
        std::vector<Rational> lhs(dim), rhs(dim);
        for (int r = 0; r < dim; ++r) {
            const Rational& c = M.at(r, col);
            if (c.is_zero())
                continue;
            t.clear();
            sp.apply_pair(i, j, r, t);
            for (const auto& [row, v] : t)
                lhs[row] += c * Rational(v);
        }
        t.clear();
        sp.apply_pair(i, j, col, t);
        for (const auto& [r2, v] : t)
            for (int r = 0; r < dim; ++r) {
                const Rational& c = M.at(r, r2);
                if (!c.is_zero())
                    rhs[r] += Rational(v) * c;
            }
        if (lhs != rhs)
            return false;
    }
    return true;
}

} // namespace qk::ops
