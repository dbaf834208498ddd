#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qk/labels.hpp"

// Character oracle for products of type-C groups, used as the independent
// ground truth for every closed-form rule in this library.  It knows nothing
// about fusion rules, admissibility or spinor combinatorics: weights come
// from Freudenthal's multiplicity formula plus Weyl-orbit expansion, tensor
// products from weight-multiset convolution, and decompositions from
// highest-weight peeling.

namespace qk::weyl {

// Weight in epsilon-coordinates, factor coordinates concatenated.
using WeightVec = std::vector<int>;

// Character as weight -> multiplicity.  std::map keys are lexicographically
// ordered, so the largest weight is rbegin(); for Weyl-invariant multisets it
// is automatically dominant.
using WeightMultiset = std::map<WeightVec, long long>;

// Z-linear combination of irreducibles, keyed by dominant highest weight.
using VirtualCharacter = std::map<WeightVec, long long>;

// Product of type-C factors; {1, n} models Sp(1) x Sp(n).
struct ProductGroup {
    std::vector<int> ranks;

    int total_rank() const {
        int r = 0;
        for (int x : ranks)
            r += x;
        return r;
    }
};

namespace detail {

inline bool is_dominant_c(const int* w, int rank) {
    for (int i = 0; i < rank; ++i) {
        if (w[i] < 0)
            return false;
        if (i > 0 && w[i] > w[i - 1])
            return false;
    }
    return true;
}

// Dominant Weyl conjugate under signed permutations: |entries| sorted
// decreasingly.
inline WeightVec dominant_conjugate_c(WeightVec w) {
    for (int& x : w)
        x = x < 0 ? -x : x;
    std::sort(w.begin(), w.end(), std::greater<int>());
    return w;
}

inline long long dot(const WeightVec& x, const WeightVec& y) {
    long long s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += static_cast<long long>(x[i]) * y[i];
    return s;
}

inline std::vector<WeightVec> positive_roots_c(int rank) {
    std::vector<WeightVec> roots;
    for (int i = 0; i < rank; ++i) {
        for (int j = i + 1; j < rank; ++j) {
            WeightVec r(rank, 0);
            r[i] = 1;
            r[j] = -1;
            roots.push_back(r);
            r[j] = 1;
            roots.push_back(r);
        }
        WeightVec r(rank, 0);
        r[i] = 2;
        roots.push_back(r);
    }
    return roots;
}

// hw - mu as a nonnegative integer combination of simple roots?  With
// d = hw - mu the coefficients are the partial sums s_j (j < rank) and
// s_rank / 2, so the test is: partial sums >= 0, total sum even.
inline bool in_positive_root_cone(const WeightVec& hw, const WeightVec& mu) {
    long long s = 0;
    int rank = static_cast<int>(hw.size());
    for (int j = 0; j < rank; ++j) {
        s += hw[j] - mu[j];
        if (s < 0)
            return false;
    }
    return s % 2 == 0;
}

// Height of hw - mu in the simple-root basis; valid when the cone test holds.
inline long long root_height(const WeightVec& hw, const WeightVec& mu) {
    long long h = 0, s = 0;
    int rank = static_cast<int>(hw.size());
    for (int j = 0; j < rank; ++j) {
        s += hw[j] - mu[j];
        h += s;
    }
    // The last partial sum enters with weight 1/2; h currently counts it once.
    return h - s / 2;
}

inline void enumerate_dominant_below(const WeightVec& hw,
                                     std::vector<WeightVec>& out) {
    int rank = static_cast<int>(hw.size());
    WeightVec mu(rank, 0);
    int cap0 = hw.empty() ? 0 : hw[0];
    auto rec = [&](auto&& self, int pos, int cap) -> void {
        if (pos == rank) {
            if (in_positive_root_cone(hw, mu))
                out.push_back(mu);
            return;
        }
        for (int v = 0; v <= cap; ++v) {
            mu[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, cap0);
}

// Weight multiplicities of the C_rank irreducible with highest weight hw,
// restricted to dominant weights.  Freudenthal:
//   (|hw+rho|^2 - |mu+rho|^2) m(mu) = 2 sum_{alpha>0} sum_{k>=1}
//                                       m(mu+k alpha) <mu+k alpha, alpha>.
inline std::map<WeightVec, long long> freudenthal_dominant(int rank,
                                                           const WeightVec& hw) {
    std::vector<WeightVec> doms;
    enumerate_dominant_below(hw, doms);
    std::sort(doms.begin(), doms.end(), [&](const WeightVec& x, const WeightVec& y) {
        return root_height(hw, x) < root_height(hw, y);
    });

    WeightVec rho(rank);
    for (int i = 0; i < rank; ++i)
        rho[i] = rank - i;
    auto norm_shifted = [&](const WeightVec& w) {
        long long s = 0;
        for (int i = 0; i < rank; ++i) {
            long long c = w[i] + rho[i];
            s += c * c;
        }
        return s;
    };
    const long long top_norm = norm_shifted(hw);
    long long hw_mass = 0;
    for (int x : hw)
        hw_mass += x;

    const std::vector<WeightVec> roots = positive_roots_c(rank);
    std::map<WeightVec, long long> mult;
    for (const WeightVec& mu : doms) {
        if (mu == hw) {
            mult[mu] = 1;
            continue;
        }
        long long num = 0;
        for (const WeightVec& alpha : roots) {
            WeightVec nu = mu;
            for (long long k = 1;; ++k) {
                long long abs_mass = 0;
                for (std::size_t i = 0; i < nu.size(); ++i) {
                    nu[i] += alpha[i];
                    abs_mass += nu[i] < 0 ? -nu[i] : nu[i];
                }
                if (abs_mass > hw_mass)
                    break;
                auto it = mult.find(dominant_conjugate_c(nu));
                if (it != mult.end() && it->second != 0)
                    num += it->second * dot(nu, alpha);
            }
        }
        long long den = top_norm - norm_shifted(mu);
        assert(den > 0);
        assert((2 * num) % den == 0);
        long long m = 2 * num / den;
        assert(m > 0);
        mult[mu] = m;
    }
    return mult;
}

// All distinct signed permutations of a dominant weight.
inline void orbit_expand(const WeightVec& mu, long long mult, WeightMultiset& out) {
    WeightVec perm = mu;
    std::sort(perm.begin(), perm.end());
    do {
        std::vector<int> nz;
        for (int i = 0; i < static_cast<int>(perm.size()); ++i)
            if (perm[i] != 0)
                nz.push_back(i);
        int patterns = 1 << nz.size();
        for (int p = 0; p < patterns; ++p) {
            WeightVec s = perm;
            for (std::size_t t = 0; t < nz.size(); ++t)
                if (p & (1 << t))
                    s[nz[t]] = -s[nz[t]];
            out[s] += mult;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

} // namespace detail

class WeylOracle {
public:
    explicit WeylOracle(ProductGroup g) : g_(std::move(g)) {
        if (g_.ranks.empty())
            throw std::invalid_argument("product group needs at least one factor");
        for (int r : g_.ranks)
            if (r < 1)
                throw std::invalid_argument("factor ranks must be positive");
        memo_.resize(g_.ranks.size());
    }

    const ProductGroup& group() const { return g_; }

    // Full weight multiset of the irreducible with highest weight hw
    // (factor coordinates concatenated, each slice dominant).
    WeightMultiset irrep_weights(const WeightVec& hw) const {
        check_hw(hw);
        WeightMultiset acc{{WeightVec{}, 1}};
        int off = 0;
        for (std::size_t f = 0; f < g_.ranks.size(); ++f) {
            WeightVec slice(hw.begin() + off, hw.begin() + off + g_.ranks[f]);
            const WeightMultiset& fw = factor_weights(f, slice);
            WeightMultiset next;
            for (const auto& [pre, m1] : acc)
                for (const auto& [w, m2] : fw) {
                    WeightVec full = pre;
                    full.insert(full.end(), w.begin(), w.end());
                    next[full] = m1 * m2;
                }
            acc = std::move(next);
            off += g_.ranks[f];
        }
        return acc;
    }

    long long irrep_dim(const WeightVec& hw) const {
        check_hw(hw);
        long long d = 1;
        int off = 0;
        for (int r : g_.ranks) {
            WeightVec slice(hw.begin() + off, hw.begin() + off + r);
            d *= qk::detail::c_type_dimension(r, slice);
            off += r;
        }
        return d;
    }

    // Peel off the lexicographically largest weight; for Weyl-invariant input
    // it is dominant and leads the character of one irreducible constituent.
    VirtualCharacter decompose(WeightMultiset ch) const {
        VirtualCharacter out;
        while (!ch.empty()) {
            auto top = std::prev(ch.end());
            if (top->second == 0) {
                ch.erase(top);
                continue;
            }
            WeightVec hw = top->first;
            long long mult = top->second;
            if (!is_dominant(hw))
                throw std::invalid_argument(
                    "weight multiset is not Weyl-invariant");
            out[hw] += mult;
            for (const auto& [w, m] : irrep_weights(hw)) {
                auto it = ch.emplace(w, 0).first;
                it->second -= mult * m;
                if (it->second == 0)
                    ch.erase(it);
            }
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    }

    WeightMultiset expand(const VirtualCharacter& vc) const {
        WeightMultiset out;
        for (const auto& [hw, mult] : vc)
            for (const auto& [w, m] : irrep_weights(hw)) {
                long long& slot = out[w];
                slot += mult * m;
                if (slot == 0)
                    out.erase(w);
            }
        return out;
    }

    VirtualCharacter tensor(const VirtualCharacter& x,
                            const VirtualCharacter& y) const {
        return decompose(convolve(expand(x), expand(y)));
    }

    long long dim(const VirtualCharacter& vc) const {
        long long d = 0;
        for (const auto& [hw, mult] : vc)
            d += mult * irrep_dim(hw);
        return d;
    }

    static WeightMultiset convolve(const WeightMultiset& x,
                                   const WeightMultiset& y) {
        WeightMultiset out;
        for (const auto& [wx, mx] : x)
            for (const auto& [wy, my] : y) {
                WeightVec s(wx.size());
                for (std::size_t i = 0; i < s.size(); ++i)
                    s[i] = wx[i] + wy[i];
                long long& slot = out[s];
                slot += mx * my;
                if (slot == 0)
                    out.erase(s);
            }
        return out;
    }

    // Character of Lambda^k of the module with character ch: elementary
    // symmetric polynomial in the weight lines, i.e. a sum over k-subsets of
    // the multiplicity-expanded line list.
    static WeightMultiset exterior_power(const WeightMultiset& ch, int k) {
        std::vector<const WeightVec*> lines;
        std::size_t width = 0;
        for (const auto& [w, m] : ch) {
            if (m < 0)
                throw std::invalid_argument(
                    "exterior power needs a genuine character");
            width = w.size();
            for (long long i = 0; i < m; ++i)
                lines.push_back(&w);
        }
        if (k < 0 || k > static_cast<int>(lines.size()))
            throw std::invalid_argument("exterior power degree out of range");
        WeightMultiset out;
        WeightVec acc(width, 0);
        auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
            if (remaining == 0) {
                ++out[acc];
                return;
            }
            for (std::size_t i = start; i + remaining <= lines.size(); ++i) {
                const WeightVec& w = *lines[i];
                for (std::size_t c = 0; c < width; ++c)
                    acc[c] += w[c];
                self(self, i + 1, remaining - 1);
                for (std::size_t c = 0; c < width; ++c)
                    acc[c] -= w[c];
            }
        };
        rec(rec, 0, k);
        return out;
    }

    static long long mass(const WeightMultiset& ch) {
        long long s = 0;
        for (const auto& [w, m] : ch)
            s += m;
        return s;
    }

    bool is_dominant(const WeightVec& w) const {
        if (static_cast<int>(w.size()) != g_.total_rank())
            return false;
        int off = 0;
        for (int r : g_.ranks) {
            if (!detail::is_dominant_c(w.data() + off, r))
                return false;
            off += r;
        }
        return true;
    }

private:
    void check_hw(const WeightVec& hw) const {
        if (!is_dominant(hw))
            throw std::invalid_argument("highest weight must be dominant");
    }

    const WeightMultiset& factor_weights(std::size_t f, const WeightVec& hw) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_[f].find(hw);
        if (it != memo_[f].end())
            return it->second;
        WeightMultiset full;
        for (const auto& [mu, m] : detail::freudenthal_dominant(g_.ranks[f], hw))
            detail::orbit_expand(mu, m, full);
        return memo_[f].emplace(hw, std::move(full)).first->second;
    }

    ProductGroup g_;
    mutable std::mutex mu_;
    mutable std::vector<std::map<WeightVec, WeightMultiset>> memo_;
};

// Bridges between label types and oracle weights for Sp(1) x Sp(n).

inline ProductGroup sp1xspn_group(QuatDim n) { return ProductGroup{{1, n.value()}}; }
inline ProductGroup spn_group(QuatDim n) { return ProductGroup{{n.value()}}; }

inline WeightVec product_hw(QuatDim n, int k, const SpnWeight& w) {
    WeightVec hw{k};
    WeightVec tail = w.padded(n.value());
    hw.insert(hw.end(), tail.begin(), tail.end());
    return hw;
}

inline WeightVec product_hw(QuatDim n, const IrrepLabel& rep) {
    return product_hw(n, rep.k(), SpnWeight::two_column(rep.a(), rep.b()));
}

inline WeightVec product_hw(QuatDim n, const TwistLabel& tw) {
    std::vector<int> ones(tw.d(), 1);
    return product_hw(n, tw.l(), SpnWeight(std::move(ones)));
}

inline VirtualCharacter irrep_character(const WeightVec& hw) {
    return VirtualCharacter{{hw, 1}};
}

// Weight lines of H (x) E: (+-1 | +-eps_i), each once.
inline WeightMultiset hxe_weights(QuatDim n) {
    WeightMultiset out;
    for (int sh : {1, -1})
        for (int i = 0; i < n.value(); ++i)
            for (int se : {1, -1}) {
                WeightVec w(1 + n.value(), 0);
                w[0] = sh;
                w[1 + i] = se;
                out[w] = 1;
            }
    return out;
}

// Spinor module: sum_r Sym^r H (x) Lambda^{n-r}_0 E, r = 0..n.
inline VirtualCharacter spinor_character(QuatDim n) {
    VirtualCharacter vc;
    for (int r = 0; r <= n.value(); ++r) {
        std::vector<int> ones(n.value() - r, 1);
        vc[product_hw(n, r, SpnWeight(std::move(ones)))] = 1;
    }
    return vc;
}

// Half spinors: S+ collects the summands with r = n (mod 2).
inline VirtualCharacter half_spinor_character(QuatDim n, bool plus) {
    VirtualCharacter vc;
    for (int r = 0; r <= n.value(); ++r) {
        bool even_side = ((n.value() - r) % 2) == 0;
        if (even_side != plus)
            continue;
        std::vector<int> ones(n.value() - r, 1);
        vc[product_hw(n, r, SpnWeight(std::move(ones)))] = 1;
    }
    return vc;
}

} // namespace qk::weyl
