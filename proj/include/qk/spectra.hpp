#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qk/labels.hpp"
#include "qk/rational.hpp"
#include "qk/twists.hpp"

// Eigenvalue bounds and Dirac kernel bookkeeping on a compact quaternionic
// Kaehler manifold with scalar curvature kappa.  On every summand admissible
// for a twist (l,d) the Laplacian and the twisted Dirac square differ by the
// exact scalar kappa * phi(l,d) / (8n(n+2)); since Dirac squares are
// nonnegative, extremal twists turn that into sharp kappa bounds.

namespace qk::spectra {

using twist::Regime;

// phi(l,d) / (8n(n+2)).
inline Rational curvature_term(QuatDim n, const TwistLabel& tw) {
    return Rational(twist::phi(n, tw),
                    8LL * n.value() * (n.value() + 2));
}

// Exact coefficient c in a bound "lambda >= c * kappa" (positive regime)
// or "lambda >= c * |kappa|" (negative regime).
struct KappaCoefficient {
    Rational value;
    Regime regime;
};

struct LaplaceBound {
    KappaCoefficient coeff;
    twist::ExtremalReport extremal;
};

// Best twist-independent lower bound for the Laplacian on rep, obtained at
// the phi-extremal admissible twist.  Nonnegative whenever rep occurs in the
// form bundles (those reps admit a twist with phi = 0).
inline LaplaceBound laplace_bound(QuatDim n, const IrrepLabel& rep, Regime regime) {
    twist::ExtremalReport rpt = regime == Regime::positive
                                    ? twist::maximal_twists(n, rep)
                                    : twist::minimal_twists(n, rep);
    Rational c = curvature_term(n, rpt.twists.front().twist);
    if (regime == Regime::negative)
        c = -c;
    return LaplaceBound{KappaCoefficient{c, regime}, std::move(rpt)};
}

// Untwisted Dirac bound on the spinor summand Sym^r H (x) Lambda^{n-r}_0 E:
// D^2 >= (n+2+r) / (4(n+2)) * kappa, positive scalar curvature.
inline Rational dirac_bound_untwisted(QuatDim n, int r) {
    if (r < 0 || r > n.value())
        throw std::invalid_argument("spinor summand index out of range");
    return Rational(n.value() + 2 + r, 4 * (n.value() + 2));
}

struct KernelContributor {
    IrrepLabel rep;
    KappaCoefficient min_eigenvalue; // sharp Laplace coefficient at this twist
    long long index_sign;            // +-1 contribution to the Dirac index
};

struct KernelDescription {
    TwistLabel twist;
    Regime regime;
    bool extrapolated; // negative regime mirrors the positive-regime argument
    std::vector<KernelContributor> contributors;
};

// All summands that can contribute to ker D^2 on S (x) Sym^l H (x)
// Lambda^d_0 E: exactly the reps for which (l,d) is phi-extremal for the
// matching regime.  The scan bound covers every classified extremal form:
// maximizers need k <= l, minimizers k <= max(l+n, 2n).
inline KernelDescription dirac_kernel(QuatDim n, const TwistLabel& tw,
                                      Regime regime) {
    KernelDescription out{tw, regime, regime == Regime::negative, {}};
    Rational ct = curvature_term(n, tw);
    if (regime == Regime::negative)
        ct = -ct;
    int k_max = tw.l() + 2 * n.value();
    for (int k = 0; k <= k_max; ++k)
        for (int a = 0; a <= n.value(); ++a)
            for (int b = 0; b <= a; ++b) {
                IrrepLabel rep(n, k, a, b);
                twist::ExtremalReport rpt = regime == Regime::positive
                                                ? twist::maximal_twists(n, rep)
                                                : twist::minimal_twists(n, rep);
                for (const auto& et : rpt.twists)
                    if (et.twist == tw)
                        out.contributors.push_back(
                            {rep, KappaCoefficient{ct, regime}, et.index});
            }
    return out;
}

} // namespace qk::spectra
