#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

#include "qk/labels.hpp"

// Which twisted spinor bundles S (x) Sym^l H (x) Lambda^d_0 E contain a given
// Sym^k H (x) L(a,b), with what multiplicity, and with what index
// contribution; plus the classification of the twists extremizing
// phi(l,d) = (l+d-n)(l-d+n+2) over the admissible set.

namespace qk::twist {

enum class Regime { positive, negative };

inline const char* regime_name(Regime r) {
    return r == Regime::positive ? "positive" : "negative";
}

// Parity constraint linking rep and twist: k+a+b = n+l+d (mod 2).
inline bool congruence_ok(QuatDim n, const IrrepLabel& rep, const TwistLabel& tw) {
    return (rep.k() + rep.a() + rep.b()) % 2 ==
           (n.value() + tw.l() + tw.d()) % 2;
}

inline bool is_admissible(QuatDim n, const IrrepLabel& rep, const TwistLabel& tw) {
    if (!congruence_ok(n, rep, tw))
        return false;
    int k = rep.k(), a = rep.a(), b = rep.b(), l = tw.l(), d = tw.d();
    if (b > d)
        return false;
    if (std::abs(k - l) + std::abs(a - d) > n.value() - b)
        return false;
    if (std::abs(n.value() - a + b - d) > k + l)
        return false;
    return true;
}

// The multiplicity of rep in S (x) Sym^l H (x) Lambda^d_0 E equals the number
// of integers c with lo <= c <= hi, c = parity (mod 2).  When the congruence
// holds, lo and hi share that parity; when it fails the set is empty.
struct MultiplicityInterval {
    int lo = 1;
    int hi = 0;
    int parity = 0;

    bool empty() const { return lo > hi; }
    long long cardinality() const { return empty() ? 0 : (hi - lo) / 2 + 1; }
};

inline MultiplicityInterval multiplicity_set(QuatDim n, const IrrepLabel& rep,
                                             const TwistLabel& tw) {
    int k = rep.k(), a = rep.a(), b = rep.b(), l = tw.l(), d = tw.d();
    MultiplicityInterval iv;
    iv.parity = (a + b + d) % 2;
    if (!congruence_ok(n, rep, tw))
        return iv;
    iv.lo = std::max(b + std::abs(a - d), n.value() - k - l);
    iv.hi = n.value() -
            std::max(std::abs(k - l), std::abs(n.value() - a + b - d));
    if (!iv.empty()) {
        assert(iv.lo % 2 == iv.parity && iv.hi % 2 == iv.parity);
    }
    return iv;
}

// Multiplicity of rep in S+ (x) R minus S- (x) R.  Every contribution lands
// in the same half spinor (all c in the interval share one parity), so the
// index is +-cardinality, signed by (-1)^(a+b+d); zero when inadmissible.
inline long long index_multiplicity(QuatDim n, const IrrepLabel& rep,
                                    const TwistLabel& tw) {
    MultiplicityInterval iv = multiplicity_set(n, rep, tw);
    if (iv.empty())
        return 0;
    long long sign = iv.parity == 0 ? 1 : -1;
    return sign * iv.cardinality();
}

// Curvature weight of the twist: scaled by kappa/(8n(n+2)) it is the gap
// between the Laplacian and the square of the twisted Dirac operator.
inline long long phi(QuatDim n, const TwistLabel& tw) {
    return static_cast<long long>(tw.l() + tw.d() - n.value()) *
           (tw.l() - tw.d() + n.value() + 2);
}

enum class ExtremalClass {
    max_generic,  // k > 0 or a > b: unique maximizer (k+n-b, a)
    max_special,  // k = 0, a = b: maximizers (n-d, d), d = a..n, phi = 0
    min_large_k,  // k > (n-a)+(n-b): unique minimizer (k-n+b, a)
    min_critical, // k = (n-a)+(n-b): minimizers (n-d, d), d = b..a
    min_special,  // k = 0, a = b: same set as max_special
    min_small_k   // k < (n-a)+(n-b), k+(a-b) > 0: unique minimizer (|n-a-k|, b)
};

inline const char* extremal_class_name(ExtremalClass c) {
    switch (c) {
    case ExtremalClass::max_generic: return "max_generic";
    case ExtremalClass::max_special: return "max_special";
    case ExtremalClass::min_large_k: return "min_large_k";
    case ExtremalClass::min_critical: return "min_critical";
    case ExtremalClass::min_special: return "min_special";
    case ExtremalClass::min_small_k: return "min_small_k";
    }
    return "?";
}

struct ExtremalTwist {
    TwistLabel twist;
    long long index; // +-1; extremal twists are multiplicity-one
};

struct ExtremalReport {
    IrrepLabel rep;
    Regime regime; // positive: maximizers of phi; negative: minimizers
    ExtremalClass cls;
    long long phi_value;
    std::vector<ExtremalTwist> twists; // sorted by d ascending
};

namespace detail {

inline long long pow_sign(int e) { return e % 2 == 0 ? 1 : -1; }

} // namespace detail

// Twists maximizing phi over the admissible set of rep.
inline ExtremalReport maximal_twists(QuatDim n, const IrrepLabel& rep) {
    int k = rep.k(), a = rep.a(), b = rep.b();
    ExtremalReport rpt{rep, Regime::positive, ExtremalClass::max_generic, 0, {}};
    if (k == 0 && a == b) {
        rpt.cls = ExtremalClass::max_special;
        for (int d = a; d <= n.value(); ++d)
            rpt.twists.push_back(
                {TwistLabel(n, n.value() - d, d), detail::pow_sign(d)});
    } else {
        TwistLabel tw(n, k + n.value() - b, a);
        rpt.twists.push_back({tw, detail::pow_sign(b)});
    }
    rpt.phi_value = phi(n, rpt.twists.front().twist);
    return rpt;
}

// Twists minimizing phi over the admissible set of rep.
inline ExtremalReport minimal_twists(QuatDim n, const IrrepLabel& rep) {
    int k = rep.k(), a = rep.a(), b = rep.b();
    int crit = (n.value() - a) + (n.value() - b);
    ExtremalReport rpt{rep, Regime::negative, ExtremalClass::min_large_k, 0, {}};
    if (k > crit) {
        rpt.twists.push_back(
            {TwistLabel(n, k - n.value() + b, a), detail::pow_sign(b)});
    } else if (k == 0 && a == b) {
        // Overlaps min_critical exactly when a = b = n; the two formulas
        // give the same single twist (0, n) with the same sign there.
        rpt.cls = ExtremalClass::min_special;
        for (int d = a; d <= n.value(); ++d)
            rpt.twists.push_back(
                {TwistLabel(n, n.value() - d, d), detail::pow_sign(d)});
        if (k == crit) {
            assert(a == n.value() && rpt.twists.size() == 1);
            assert(detail::pow_sign(k + a) == rpt.twists.front().index);
        }
    } else if (k == crit) {
        rpt.cls = ExtremalClass::min_critical;
        for (int d = b; d <= a; ++d)
            rpt.twists.push_back(
                {TwistLabel(n, n.value() - d, d), detail::pow_sign(k + d)});
    } else {
        assert(k + (a - b) > 0);
        rpt.cls = ExtremalClass::min_small_k;
        rpt.twists.push_back(
            {TwistLabel(n, std::abs(n.value() - a - k), b), detail::pow_sign(a)});
    }
    rpt.phi_value = phi(n, rpt.twists.front().twist);
    return rpt;
}

// Brute-force extremizers of phi over the admissible set, scanning l <= l_max.
// Any admissible twist has l <= k+n (the diamond inequalities force it), so
// l_max >= k+n scans everything; the default adds slack.
inline std::vector<TwistLabel> extremal_bruteforce(QuatDim n, const IrrepLabel& rep,
                                                   Regime regime, int l_max = -1) {
    if (l_max < 0)
        l_max = rep.k() + n.value() + 2;
    if (l_max < rep.k() + n.value())
        throw std::invalid_argument("scan bound must cover l <= k+n");
    bool have = false;
    long long best = 0;
    std::vector<TwistLabel> arg;
    for (int l = 0; l <= l_max; ++l)
        for (int d = 0; d <= n.value(); ++d) {
            TwistLabel tw(n, l, d);
            if (!is_admissible(n, rep, tw))
                continue;
            long long p = phi(n, tw);
            bool better = !have || (regime == Regime::positive ? p > best : p < best);
            if (better) {
                best = p;
                arg.assign(1, tw);
                have = true;
            } else if (p == best) {
                arg.push_back(tw);
            }
        }
    if (!have)
        throw std::logic_error("admissible set is empty");
    std::sort(arg.begin(), arg.end(),
              [](const TwistLabel& x, const TwistLabel& y) { return x.d() < y.d(); });
    return arg;
}

} // namespace qk::twist
