#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qk/rational.hpp"

// Label types for representations of Sp(1) x Sp(n).
//
// Conventions, fixed once here and used everywhere:
//  * H is the defining Sp(1) module (quaternionic dim 1), E the defining
//    Sp(n) module (complex dim 2n).  Sym^k H is labelled by the integer k.
//  * Sp(n) = C_n highest weights are written in epsilon-coordinates as
//    weakly decreasing nonnegative integer vectors with at most n parts.
//  * L(a,b) denotes the irreducible summand of highest weight in
//    Lambda^a_0 E (x) Lambda^b_0 E, i.e. weight (2^b, 1^{a-b}); these
//    two-column weights are the only Sp(n) types occurring in forms.
//  * Lambda^d_0 E is the primitive part of Lambda^d E, weight (1^d).

namespace qk {

// Quaternionic dimension n >= 2 of the underlying geometry (real dim 4n).
class QuatDim {
public:
    explicit QuatDim(int n) : n_(n) {
        if (n < 2)
            throw std::invalid_argument("quaternionic dimension must be >= 2");
    }
    int value() const { return n_; }

private:
    int n_;
};

// Dominant C_n weight as a partition: weakly decreasing, nonnegative,
// trailing zeros trimmed so equal weights compare equal.
class SpnWeight {
public:
    SpnWeight() = default;

    explicit SpnWeight(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0)
                throw std::invalid_argument("weight parts must be nonnegative");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("weight parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0)
            parts_.pop_back();
    }

    // (2^b, 1^{a-b}), the highest weight of L(a,b).
    static SpnWeight two_column(int a, int b) {
        if (a < b || b < 0)
            throw std::invalid_argument("two-column weight needs a >= b >= 0");
        std::vector<int> p(b, 2);
        p.insert(p.end(), a - b, 1);
        return SpnWeight(std::move(p));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool fits_rank(int n) const { return length() <= n; }

    // Entries padded with zeros to the given rank.
    std::vector<int> padded(int n) const {
        if (!fits_rank(n))
            throw std::invalid_argument("weight has more parts than the rank");
        std::vector<int> v = parts_;
        v.resize(n, 0);
        return v;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend bool operator==(const SpnWeight& x, const SpnWeight& y) {
        return x.parts_ == y.parts_;
    }
    friend bool operator!=(const SpnWeight& x, const SpnWeight& y) {
        return !(x == y);
    }
    friend bool operator<(const SpnWeight& x, const SpnWeight& y) {
        return x.parts_ < y.parts_;
    }

private:
    std::vector<int> parts_;
};

// Sym^k H (x) L(a,b): the irreducible Sp(1) x Sp(n) types occurring in
// form bundles.  Valid iff k >= 0 and n >= a >= b >= 0.
class IrrepLabel {
public:
    IrrepLabel(QuatDim n, int k, int a, int b) : k_(k), a_(a), b_(b) {
        if (k < 0)
            throw std::invalid_argument("Sym^k H exponent must be nonnegative");
        if (b < 0 || a < b || a > n.value())
            throw std::invalid_argument("L(a,b) needs n >= a >= b >= 0");
    }

    int k() const { return k_; }
    int a() const { return a_; }
    int b() const { return b_; }

    std::string str() const {
        return "(" + std::to_string(k_) + "," + std::to_string(a_) + "," +
               std::to_string(b_) + ")";
    }

    friend bool operator==(const IrrepLabel& x, const IrrepLabel& y) {
        return x.k_ == y.k_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const IrrepLabel& x, const IrrepLabel& y) {
        return !(x == y);
    }
    friend bool operator<(const IrrepLabel& x, const IrrepLabel& y) {
        return std::tie(x.k_, x.a_, x.b_) < std::tie(y.k_, y.a_, y.b_);
    }

private:
    int k_, a_, b_;
};

// Twisting bundle Sym^l H (x) Lambda^d_0 E.  Valid iff l >= 0, 0 <= d <= n.
class TwistLabel {
public:
    TwistLabel(QuatDim n, int l, int d) : l_(l), d_(d) {
        if (l < 0)
            throw std::invalid_argument("Sym^l H exponent must be nonnegative");
        if (d < 0 || d > n.value())
            throw std::invalid_argument("Lambda^d_0 E needs 0 <= d <= n");
    }

    int l() const { return l_; }
    int d() const { return d_; }

    std::string str() const {
        return "(" + std::to_string(l_) + "," + std::to_string(d_) + ")";
    }

    friend bool operator==(const TwistLabel& x, const TwistLabel& y) {
        return x.l_ == y.l_ && x.d_ == y.d_;
    }
    friend bool operator!=(const TwistLabel& x, const TwistLabel& y) {
        return !(x == y);
    }
    friend bool operator<(const TwistLabel& x, const TwistLabel& y) {
        return std::tie(x.l_, x.d_) < std::tie(y.l_, y.d_);
    }

private:
    int l_, d_;
};

namespace detail {

// Weyl dimension formula for C_rank.  lam is padded to rank entries.
// Positive roots eps_i - eps_j, eps_i + eps_j (i < j) and 2 eps_i give
// factors (l_i - l_j)(l_i + l_j) and l_i with l_i = lam_i + rank - i + 1.
inline long long c_type_dimension(int rank, const std::vector<int>& lam) {
    std::vector<long long> l(rank), m(rank);
    for (int i = 0; i < rank; ++i) {
        l[i] = lam[i] + rank - i;
        m[i] = rank - i;
    }
    __int128 num = 1, den = 1;
    auto fold = [&](long long top, long long bot) {
        num *= top;
        den *= bot;
        __int128 g = gcd128(num, den);
        num /= g;
        den /= g;
    };
    for (int i = 0; i < rank; ++i) {
        fold(l[i], m[i]);
        for (int j = i + 1; j < rank; ++j) {
            fold(l[i] - l[j], m[i] - m[j]);
            fold(l[i] + l[j], m[i] + m[j]);
        }
    }
    if (den != 1)
        throw std::logic_error("dimension formula did not divide out");
    return narrow128(num);
}

} // namespace detail

// dim of the irreducible Sp(n) module with highest weight w.
inline long long irrep_dimension(QuatDim n, const SpnWeight& w) {
    if (!w.fits_rank(n.value()))
        throw std::invalid_argument("weight has more parts than the rank");
    return detail::c_type_dimension(n.value(), w.padded(n.value()));
}

// dim Sym^k H = k + 1.
inline long long sp1_dimension(int k) {
    if (k < 0)
        throw std::invalid_argument("Sym^k H exponent must be nonnegative");
    return k + 1;
}

inline long long irrep_dimension(QuatDim n, const IrrepLabel& rep) {
    return sp1_dimension(rep.k()) *
           irrep_dimension(n, SpnWeight::two_column(rep.a(), rep.b()));
}

// (k, highest weight of L(a,b)).
inline std::pair<int, SpnWeight> label_to_weight(const IrrepLabel& rep) {
    return {rep.k(), SpnWeight::two_column(rep.a(), rep.b())};
}

// Inverse of label_to_weight; nullopt when w is not two-column.
inline std::optional<IrrepLabel> label_from_weight(QuatDim n, int k,
                                                   const SpnWeight& w) {
    if (k < 0 || !w.fits_rank(n.value()))
        return std::nullopt;
    int a = w.length(), b = 0;
    for (int part : w.parts()) {
        if (part > 2)
            return std::nullopt;
        if (part == 2)
            ++b;
    }
    return IrrepLabel(n, k, a, b);
}

} // namespace qk
