#pragma once

// Verification sweeps shared by the CLI `verify` subcommand and the
// acceptance binary.  Each suite compares a closed-form module against an
// independent computation (usually the Weyl-character oracle) over a bounded
// grid and reports every mismatch as a Failure keyed by an integer tuple, so
// the minimal counterexample is just the lexicographically smallest tuple.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qk/cohomology.hpp"
#include "qk/fusion.hpp"
#include "qk/labels.hpp"
#include "qk/operators.hpp"
#include "qk/parallel.hpp"
#include "qk/rational.hpp"
#include "qk/spectra.hpp"
#include "qk/twists.hpp"
#include "qk/weyl.hpp"

namespace qk::verify {

struct Failure {
    std::string suite;
    std::vector<long long> tuple;  // grid coordinates of the failing case
    std::string detail;
};

inline bool failure_less(const Failure& x, const Failure& y) {
    if (x.tuple != y.tuple) return x.tuple < y.tuple;
    return x.detail < y.detail;
}

struct SuiteResult {
    std::string suite;
    long long cases = 0;
    std::vector<Failure> failures;

    bool ok() const { return failures.empty(); }

    void finish() { std::sort(failures.begin(), failures.end(), failure_less); }

    void absorb(SuiteResult other) {
        cases += other.cases;
        failures.insert(failures.end(),
                        std::make_move_iterator(other.failures.begin()),
                        std::make_move_iterator(other.failures.end()));
    }
};

struct Bounds {
    int n_min = 2;
    int n_max = 3;
    int k_max = -1;  // -1: per-n default 2n+2
    int l_max = -1;  // -1: per-n default 2n+2
    int threads = 0;
    long long trials = 1000;
    std::uint32_t seed = 0x51c0ffee;

    int k_for(int n) const { return k_max >= 0 ? k_max : 2 * n + 2; }
    int l_for(int n) const { return l_max >= 0 ? l_max : 2 * n + 2; }
};

namespace detail {

// Highest weight [k | parts] of Sp(1) x Sp(n); accepts only two-column tails.
inline std::optional<std::array<int, 3>> decode_two_column(const weyl::WeightVec& hw) {
    int a = 0, b = 0;
    for (std::size_t i = 1; i < hw.size(); ++i) {
        if (hw[i] < 0 || hw[i] > 2) return std::nullopt;
        if (hw[i] >= 1) ++a;
        if (hw[i] == 2) ++b;
    }
    return std::array<int, 3>{hw[0], a, b};
}

inline std::optional<std::pair<int, int>> decode_two_column_spn(const weyl::WeightVec& w) {
    int a = 0, b = 0;
    for (int p : w) {
        if (p < 0 || p > 2) return std::nullopt;
        if (p >= 1) ++a;
        if (p == 2) ++b;
    }
    return std::pair<int, int>{a, b};
}

inline std::vector<IrrepLabel> rep_grid(QuatDim n, int k_max) {
    std::vector<IrrepLabel> out;
    for (int k = 0; k <= k_max; ++k)
        for (int a = 0; a <= n.value(); ++a)
            for (int b = 0; b <= a; ++b) out.emplace_back(n, k, a, b);
    return out;
}

inline std::vector<TwistLabel> twist_grid(QuatDim n, int l_max) {
    std::vector<TwistLabel> out;
    for (int l = 0; l <= l_max; ++l)
        for (int d = 0; d <= n.value(); ++d) out.emplace_back(n, l, d);
    return out;
}

inline long long lookup(const weyl::VirtualCharacter& vc, const weyl::WeightVec& hw) {
    auto it = vc.find(hw);
    return it == vc.end() ? 0 : it->second;
}

// mt19937's output sequence is pinned by the standard; modulo keeps the
// sweep byte-identical across platforms (unlike uniform_int_distribution).
inline long long draw(std::uint32_t& state, long long bound) {
    state = state * 1664525u + 1013904223u;
    std::uint32_t x = state;
    x ^= x >> 16;
    x *= 0x7feb352du;
    x ^= x >> 15;
    x *= 0x846ca68bu;
    x ^= x >> 16;
    return static_cast<long long>(x % static_cast<std::uint32_t>(bound));
}

}  // namespace detail

// Exterior-square fusion rule against the Sp(n) oracle.
inline SuiteResult verify_fusion(const Bounds& bb) {
    SuiteResult res{"fusion"};
    for (int n = bb.n_min; n <= bb.n_max; ++n) {
        QuatDim qn(n);
        weyl::WeylOracle oracle(weyl::spn_group(qn));
        for (int c = 0; c <= n; ++c) {
            weyl::WeightVec wc(static_cast<std::size_t>(n), 0);
            for (int i = 0; i < c; ++i) wc[static_cast<std::size_t>(i)] = 1;
            for (int d = 0; d <= c; ++d) {
                ++res.cases;
                weyl::WeightVec wd(static_cast<std::size_t>(n), 0);
                for (int i = 0; i < d; ++i) wd[static_cast<std::size_t>(i)] = 1;
                weyl::VirtualCharacter got = oracle.tensor(weyl::irrep_character(wc),
                                                           weyl::irrep_character(wd));
                std::map<std::pair<int, int>, long long> got_ab;
                bool bad_constituent = false;
                for (const auto& [hw, mult] : got) {
                    auto ab = detail::decode_two_column_spn(hw);
                    if (!ab) {
                        bad_constituent = true;
                        break;
                    }
                    got_ab[*ab] += mult;
                }
                std::map<std::pair<int, int>, long long> want_ab;
                for (auto [a, b] : fusion::fuse_exterior(qn, c, d)) want_ab[{a, b}] = 1;
                if (bad_constituent || got_ab != want_ab) {
                    res.failures.push_back(
                        {res.suite,
                         {n, c, d},
                         bad_constituent ? "oracle produced a non-two-column constituent"
                                         : "fusion rule disagrees with character oracle"});
                }
            }
        }
    }
    res.finish();
    return res;
}

// Spinor space dimension and half-spinor split.
inline SuiteResult verify_spinor(const Bounds& bb) {
    SuiteResult res{"twists"};
    for (int n = bb.n_min; n <= bb.n_max; ++n) {
        ++res.cases;
        QuatDim qn(n);
        weyl::WeylOracle oracle(weyl::sp1xspn_group(qn));
        long long want = 1LL << (2 * n);
        long long full = oracle.dim(weyl::spinor_character(qn));
        long long plus = oracle.dim(weyl::half_spinor_character(qn, true));
        long long minus = oracle.dim(weyl::half_spinor_character(qn, false));
        long long mass = weyl::WeylOracle::mass(oracle.expand(weyl::spinor_character(qn)));
        if (full != want || plus + minus != want || mass != want) {
            res.failures.push_back({res.suite,
                                    {n},
                                    "spinor dimension " + std::to_string(full) + "+" +
                                        std::to_string(plus) + "/" + std::to_string(minus) +
                                        " vs 2^{2n} = " + std::to_string(want)});
        }
    }
    res.finish();
    return res;
}

// Admissibility and multiplicity of reps in spinor-twist products, against
// decomposing S (x) Sym^l H (x) Lambda^d_0 E in the oracle.
inline SuiteResult verify_twists(const Bounds& bb) {
    SuiteResult res{"twists"};
    for (int n = bb.n_min; n <= bb.n_max; ++n) {
        QuatDim qn(n);
        weyl::WeylOracle oracle(weyl::sp1xspn_group(qn));
        weyl::WeightMultiset sw = oracle.expand(weyl::spinor_character(qn));
        auto twists = detail::twist_grid(qn, bb.l_for(n));
        auto reps = detail::rep_grid(qn, bb.k_for(n));
        std::vector<long long> cell_cases(twists.size(), 0);
        std::vector<std::vector<Failure>> cell_fail(twists.size());
        parallel_for(static_cast<long long>(twists.size()), bb.threads, [&](long long ti) {
            const TwistLabel& tw = twists[static_cast<std::size_t>(ti)];
            weyl::VirtualCharacter vc = oracle.decompose(weyl::WeylOracle::convolve(
                sw, oracle.irrep_weights(weyl::product_hw(qn, tw))));
            std::set<std::array<int, 3>> seen;
            for (const IrrepLabel& r : reps) seen.insert({r.k(), r.a(), r.b()});
            for (const auto& [hw, mult] : vc) {
                auto kab = detail::decode_two_column(hw);
                if (!kab) {
                    cell_fail[static_cast<std::size_t>(ti)].push_back(
                        {res.suite,
                         {n, tw.l(), tw.d()},
                         "spinor twist contains a constituent outside the two-column family"});
                    continue;
                }
                seen.insert(*kab);
            }
            for (const auto& kab : seen) {
                ++cell_cases[static_cast<std::size_t>(ti)];
                IrrepLabel rep(qn, kab[0], kab[1], kab[2]);
                long long closed = twist::multiplicity_set(qn, rep, tw).cardinality();
                long long truth = detail::lookup(vc, weyl::product_hw(qn, rep));
                bool adm = twist::is_admissible(qn, rep, tw);
                if (closed != truth || adm != (truth > 0)) {
                    cell_fail[static_cast<std::size_t>(ti)].push_back(
                        {res.suite,
                         {n, tw.l(), tw.d(), kab[0], kab[1], kab[2]},
                         "multiplicity " + std::to_string(closed) + " vs oracle " +
                             std::to_string(truth) +
                             (adm == (truth > 0) ? "" : ", admissibility flag wrong")});
                }
            }
        });
        for (std::size_t i = 0; i < twists.size(); ++i) {
            res.cases += cell_cases[i];
            for (auto& f : cell_fail[i]) res.failures.push_back(std::move(f));
        }
    }
    res.finish();
    return res;
}

// Index (signed multiplicity) against the half-spinor difference S+ - S-.
inline SuiteResult verify_index(const Bounds& bb) {
    SuiteResult res{"index"};
    for (int n = bb.n_min; n <= bb.n_max; ++n) {
        QuatDim qn(n);
        weyl::WeylOracle oracle(weyl::sp1xspn_group(qn));
        weyl::WeightMultiset swp = oracle.expand(weyl::half_spinor_character(qn, true));
        weyl::WeightMultiset swm = oracle.expand(weyl::half_spinor_character(qn, false));
        auto twists = detail::twist_grid(qn, bb.l_for(n));
        auto reps = detail::rep_grid(qn, bb.k_for(n));
        std::vector<long long> cell_cases(twists.size(), 0);
        std::vector<std::vector<Failure>> cell_fail(twists.size());
        parallel_for(static_cast<long long>(twists.size()), bb.threads, [&](long long ti) {
            const TwistLabel& tw = twists[static_cast<std::size_t>(ti)];
            const auto& tww = oracle.irrep_weights(weyl::product_hw(qn, tw));
            weyl::VirtualCharacter vcp =
                oracle.decompose(weyl::WeylOracle::convolve(swp, tww));
            weyl::VirtualCharacter vcm =
                oracle.decompose(weyl::WeylOracle::convolve(swm, tww));
            std::set<std::array<int, 3>> seen;
            for (const IrrepLabel& r : reps) seen.insert({r.k(), r.a(), r.b()});
            for (const auto& [hw, mult] : vcp)
                if (auto kab = detail::decode_two_column(hw)) seen.insert(*kab);
            for (const auto& [hw, mult] : vcm)
                if (auto kab = detail::decode_two_column(hw)) seen.insert(*kab);
            for (const auto& kab : seen) {
                ++cell_cases[static_cast<std::size_t>(ti)];
                IrrepLabel rep(qn, kab[0], kab[1], kab[2]);
                weyl::WeightVec hw = weyl::product_hw(qn, rep);
                long long truth = detail::lookup(vcp, hw) - detail::lookup(vcm, hw);
                long long closed = twist::index_multiplicity(qn, rep, tw);
                if (closed != truth) {
                    cell_fail[static_cast<std::size_t>(ti)].push_back(
                        {res.suite,
                         {n, tw.l(), tw.d(), kab[0], kab[1], kab[2]},
                         "index " + std::to_string(closed) + " vs oracle " +
                             std::to_string(truth)});
                }
            }
        });
        for (std::size_t i = 0; i < twists.size(); ++i) {
            res.cases += cell_cases[i];
            for (auto& f : cell_fail[i]) res.failures.push_back(std::move(f));
        }
    }
    res.finish();
    return res;
}

// Closed-form extremal twists against brute-force search, plus the stated
// index signs and multiplicity-one property.  The oracle cross-check of the
// extremal index values is capped at n <= 3: extremal l reaches k_max + n,
// and full spinor products at larger rank dominate the runtime without
// sharpening the check.
inline SuiteResult verify_extremal(const Bounds& bb) {
    SuiteResult res{"extremal"};
    using twist::Regime;
    for (int n = bb.n_min; n <= bb.n_max; ++n) {
        QuatDim qn(n);
        auto reps = detail::rep_grid(qn, bb.k_for(n));
        for (const IrrepLabel& rep : reps) {
            for (Regime reg : {Regime::positive, Regime::negative}) {
                ++res.cases;
                long long regc = reg == Regime::positive ? 0 : 1;
                twist::ExtremalReport rpt = reg == Regime::positive
                                                ? twist::maximal_twists(qn, rep)
                                                : twist::minimal_twists(qn, rep);
                std::vector<TwistLabel> brute;
                try {
                    brute = twist::extremal_bruteforce(qn, rep, reg);
                } catch (const std::exception& e) {
                    res.failures.push_back({res.suite,
                                            {n, rep.k(), rep.a(), rep.b(), regc},
                                            std::string("brute force failed: ") + e.what()});
                    continue;
                }
                bool same = rpt.twists.size() == brute.size();
                for (std::size_t i = 0; same && i < brute.size(); ++i)
                    same = rpt.twists[i].twist == brute[i];
                if (!same) {
                    res.failures.push_back({res.suite,
                                            {n, rep.k(), rep.a(), rep.b(), regc},
                                            "closed-form extremal set differs from brute force"});
                    continue;
                }
                for (std::size_t i = 0; i < brute.size(); ++i) {
                    const auto& et = rpt.twists[i];
                    if (twist::phi(qn, et.twist) != rpt.phi_value) {
                        res.failures.push_back({res.suite,
                                                {n, rep.k(), rep.a(), rep.b(), regc},
                                                "phi is not constant across the extremal set"});
                        break;
                    }
                    auto ms = twist::multiplicity_set(qn, rep, et.twist);
                    if (ms.cardinality() != 1 ||
                        twist::index_multiplicity(qn, rep, et.twist) != et.index) {
                        res.failures.push_back(
                            {res.suite,
                             {n, rep.k(), rep.a(), rep.b(), regc},
                             "extremal twist is not multiplicity one with the stated index"});
                        break;
                    }
                }
            }
        }

        if (n > 3) continue;

        // Oracle pass: index of rep in S+/- (x) twist at every extremal twist.
        std::set<std::pair<int, int>> needed;
        for (const IrrepLabel& rep : reps)
            for (Regime reg : {Regime::positive, Regime::negative}) {
                auto rpt = reg == Regime::positive ? twist::maximal_twists(qn, rep)
                                                   : twist::minimal_twists(qn, rep);
                for (const auto& et : rpt.twists) needed.insert({et.twist.l(), et.twist.d()});
            }
        std::vector<std::pair<int, int>> order(needed.begin(), needed.end());
        weyl::WeylOracle oracle(weyl::sp1xspn_group(qn));
        weyl::WeightMultiset swp = oracle.expand(weyl::half_spinor_character(qn, true));
        weyl::WeightMultiset swm = oracle.expand(weyl::half_spinor_character(qn, false));
        std::vector<weyl::VirtualCharacter> vplus(order.size()), vminus(order.size());
        parallel_for(static_cast<long long>(order.size()), bb.threads, [&](long long i) {
            TwistLabel tw(qn, order[static_cast<std::size_t>(i)].first,
                          order[static_cast<std::size_t>(i)].second);
            const auto& tww = oracle.irrep_weights(weyl::product_hw(qn, tw));
            vplus[static_cast<std::size_t>(i)] =
                oracle.decompose(weyl::WeylOracle::convolve(swp, tww));
            vminus[static_cast<std::size_t>(i)] =
                oracle.decompose(weyl::WeylOracle::convolve(swm, tww));
        });
        std::map<std::pair<int, int>, std::size_t> slot;
        for (std::size_t i = 0; i < order.size(); ++i) slot[order[i]] = i;
        for (const IrrepLabel& rep : reps) {
            weyl::WeightVec hw = weyl::product_hw(qn, rep);
            for (Regime reg : {Regime::positive, Regime::negative}) {
                long long regc = reg == Regime::positive ? 0 : 1;
                auto rpt = reg == Regime::positive ? twist::maximal_twists(qn, rep)
                                                   : twist::minimal_twists(qn, rep);
                for (const auto& et : rpt.twists) {
                    ++res.cases;
                    std::size_t i = slot.at({et.twist.l(), et.twist.d()});
                    long long truth =
                        detail::lookup(vplus[i], hw) - detail::lookup(vminus[i], hw);
                    if (truth != et.index) {
                        res.failures.push_back(
                            {res.suite,
                             {n, rep.k(), rep.a(), rep.b(), regc, et.twist.l(), et.twist.d()},
                             "extremal index " + std::to_string(et.index) + " vs oracle " +
                                 std::to_string(truth)});
                    }
                }
            }
        }
    }
    res.finish();
    return res;
}

// Casimir matrices: scalar on each irreducible model space, and commuting
// with every quadratic generator.  Kind coordinate: 0 exterior, 1 symmetric,
// 2 the rank-one symmetric model.
inline SuiteResult verify_casimir(const Bounds& bb) {
    SuiteResult res{"casimir"};
    const int sym_l_max = 5;
    const int sym_n_max = 3;
    for (int n = std::max(2, bb.n_min); n <= bb.n_max; ++n) {
        ops::SymplecticFrame fr(n);
        for (int d = 0; d <= n; ++d) {
            ++res.cases;
            ops::ExteriorSpace sp(fr, d);
            RMatrix cas = ops::sp_casimir_matrix(sp);
            Rational want = ops::casimir_ext_scalar(n, d);
            bool ok = true;
            for (const auto& v : ops::primitive_basis(fr, d)) {
                std::vector<Rational> got = cas.apply(v);
                for (std::size_t r = 0; r < got.size(); ++r)
                    if (got[r] != want * v[r]) ok = false;
            }
            if (!ok)
                res.failures.push_back({res.suite,
                                        {n, 0, d},
                                        "Casimir is not the expected scalar on primitive forms"});
            for (int i = 0; i < 2 * n; ++i)
                for (int j = i; j < 2 * n; ++j) {
                    ++res.cases;
                    if (!ops::commutes_with_pair_action(sp, i, j, cas))
                        res.failures.push_back({res.suite,
                                                {n, 0, d, i, j},
                                                "Casimir fails to commute with a generator"});
                }
        }
        if (n <= sym_n_max) {
            for (int l = 0; l <= sym_l_max; ++l) {
                ++res.cases;
                ops::SymmetricSpace sp(fr, l);
                RMatrix cas = ops::sp_casimir_matrix(sp);
                if (!cas.is_scalar(ops::casimir_sym_scalar(n, l)))
                    res.failures.push_back({res.suite,
                                            {n, 1, l},
                                            "Casimir is not the expected scalar on symmetric powers"});
                for (int i = 0; i < 2 * n; ++i)
                    for (int j = i; j < 2 * n; ++j) {
                        ++res.cases;
                        if (!ops::commutes_with_pair_action(sp, i, j, cas))
                            res.failures.push_back(
                                {res.suite,
                                 {n, 1, l, i, j},
                                 "Casimir fails to commute with a generator"});
                    }
            }
        }
    }
    {
        ops::SymplecticFrame fr(1);
        for (int k = 0; k <= sym_l_max; ++k) {
            ++res.cases;
            ops::SymmetricSpace sp(fr, k);
            RMatrix cas = ops::sp_casimir_matrix(sp);
            if (!cas.is_scalar(ops::sp1_casimir_scalar(k)))
                res.failures.push_back({res.suite,
                                        {1, 2, k},
                                        "rank-one Casimir is not the expected scalar"});
        }
    }
    res.finish();
    return res;
}

// The quartic curvature term built from a single symplectic vector vanishes
// identically on exterior powers, while its square-factor does not.
inline SuiteResult verify_hyper(const Bounds& bb) {
    SuiteResult res{"hyper"};
    for (int n = std::max(2, bb.n_min); n <= std::min(3, bb.n_max); ++n) {
        ops::SymplecticFrame fr(n);
        auto family = ops::polarization_family(fr);
        bool factor_nonzero = false;
        for (int d = 0; d <= 2 * n; ++d) {
            ops::ExteriorSpace sp(fr, d);
            for (std::size_t ei = 0; ei < family.size(); ++ei) {
                ++res.cases;
                if (!ops::hyper_term_matrix(sp, family[ei]).is_zero())
                    res.failures.push_back({res.suite,
                                            {n, d, static_cast<long long>(ei)},
                                            "quartic term is nonzero on an exterior power"});
                if (!ops::half_square_matrix(sp, family[ei]).is_zero()) factor_nonzero = true;
            }
        }
        ++res.cases;
        if (!factor_nonzero)
            res.failures.push_back(
                {res.suite,
                 {n, -1, -1},
                 "square factor vanished everywhere; the cancellation check is vacuous"});
    }
    res.finish();
    return res;
}

// Closed-form eigenvalue bounds.  Kind coordinate: 0 Weitzenbock constants,
// 1 untwisted Dirac constants, 2 curvature-term differences.
inline SuiteResult verify_bounds(const Bounds& bb) {
    SuiteResult res{"bounds"};
    using twist::Regime;
    for (int n = bb.n_min; n <= bb.n_max; ++n) {
        QuatDim qn(n);
        for (int r = 0; r <= n; ++r) {
            ++res.cases;
            Rational got = spectra::laplace_bound(qn, IrrepLabel(qn, r, r, 0),
                                                  Regime::positive)
                               .coeff.value;
            if (got != Rational(r * (n + 1), 2 * n * (n + 2)))
                res.failures.push_back({res.suite,
                                        {n, 0, 0, r},
                                        "symmetric-power bound constant mismatch"});
        }
        {
            ++res.cases;
            Rational got = spectra::laplace_bound(qn, IrrepLabel(qn, 1, 1, 0),
                                                  Regime::negative)
                               .coeff.value;
            if (got != Rational(1, 2 * (n + 2)))
                res.failures.push_back({res.suite,
                                        {n, 0, 1, 0},
                                        "tautological-bundle bound constant mismatch"});
        }
        {
            ++res.cases;
            Rational got = spectra::laplace_bound(qn, IrrepLabel(qn, 2, 0, 0),
                                                  Regime::positive)
                               .coeff.value;
            if (got != Rational(1, 2 * n))
                res.failures.push_back({res.suite,
                                        {n, 0, 2, 0},
                                        "Sym2 H bound constant mismatch"});
        }
        {
            ++res.cases;
            Rational got = spectra::laplace_bound(qn, IrrepLabel(qn, 2, 2, 0),
                                                  Regime::positive)
                               .coeff.value;
            if (got != Rational(n + 1, n * (n + 2)))
                res.failures.push_back({res.suite,
                                        {n, 0, 3, 0},
                                        "two-form-type bound constant mismatch"});
        }
        for (int r = 0; r <= n; ++r) {
            ++res.cases;
            if (spectra::dirac_bound_untwisted(qn, r) != Rational(n + 2 + r, 4 * (n + 2)))
                res.failures.push_back({res.suite,
                                        {n, 1, r},
                                        "untwisted Dirac bound constant mismatch"});
        }
        // Curvature-term differences between admissible twists of one rep
        // depend only on phi; pins the exact-arithmetic normalization.
        for (const IrrepLabel& rep : detail::rep_grid(qn, 2)) {
            std::vector<TwistLabel> adm;
            for (const TwistLabel& tw : detail::twist_grid(qn, n + 2))
                if (twist::is_admissible(qn, rep, tw)) adm.push_back(tw);
            for (std::size_t i = 0; i + 1 < adm.size(); ++i) {
                ++res.cases;
                Rational diff = spectra::curvature_term(qn, adm[i + 1]) -
                                spectra::curvature_term(qn, adm[i]);
                Rational want(twist::phi(qn, adm[i + 1]) - twist::phi(qn, adm[i]),
                              8LL * n * (n + 2));
                if (diff != want)
                    res.failures.push_back({res.suite,
                                            {n, 2, rep.k(), rep.a(), rep.b(),
                                             static_cast<long long>(i)},
                                            "curvature-term difference mismatch"});
            }
        }
    }
    res.finish();
    return res;
}

// Bookkeeping of the exterior algebra of the cotangent model H (x) E.
inline SuiteResult verify_forms(const Bounds& bb) {
    SuiteResult res{"forms"};
    for (int n = bb.n_min; n <= bb.n_max; ++n) {
        QuatDim qn(n);
        weyl::WeylOracle oracle(weyl::sp1xspn_group(qn));
        std::vector<weyl::VirtualCharacter> degree(static_cast<std::size_t>(4 * n) + 1);
        parallel_for(4LL * n + 1, bb.threads, [&](long long k) {
            degree[static_cast<std::size_t>(k)] =
                cohomology::forms_decomposition(qn, static_cast<int>(k), oracle);
        });
        long long total_mass = 0;
        std::map<std::array<int, 3>, long long> totals;
        bool bad_constituent = false;
        for (int k = 0; k <= 4 * n; ++k) {
            for (const auto& [hw, mult] : degree[static_cast<std::size_t>(k)]) {
                total_mass += mult * oracle.irrep_dim(hw);
                auto kab = detail::decode_two_column(hw);
                if (!kab) {
                    bad_constituent = true;
                    res.failures.push_back({res.suite,
                                            {n, k},
                                            "form degree contains a non-two-column constituent"});
                    continue;
                }
                totals[*kab] += mult;
            }
        }
        ++res.cases;
        if (total_mass != 1LL << (4 * n))
            res.failures.push_back({res.suite,
                                    {n},
                                    "total dimension of the form algebra is wrong"});
        if (!bad_constituent) {
            std::set<std::array<int, 3>> keys;
            for (const auto& [kab, mult] : totals) keys.insert(kab);
            for (const IrrepLabel& rep : detail::rep_grid(qn, 2 * n + 2))
                keys.insert({rep.k(), rep.a(), rep.b()});
            for (const auto& kab : keys) {
                ++res.cases;
                auto it = totals.find(kab);
                long long got = it == totals.end() ? 0 : it->second;
                long long want = cohomology::total_multiplicity_in_forms(
                    qn, IrrepLabel(qn, kab[0], kab[1], kab[2]));
                if (got != want)
                    res.failures.push_back(
                        {res.suite,
                         {n, kab[0], kab[1], kab[2]},
                         "total multiplicity across the form algebra: closed form " +
                             std::to_string(want) + " vs oracle " + std::to_string(got)});
            }
        }
        // Harmonic candidates appear exactly once in each listed degree and
        // in no other degree.
        for (auto reg : {twist::Regime::positive, twist::Regime::negative}) {
            for (const auto& cand : cohomology::harmonic_candidates(qn, reg)) {
                ++res.cases;
                weyl::WeightVec hw = weyl::product_hw(qn, cand.rep);
                std::set<int> listed(cand.degrees.begin(), cand.degrees.end());
                bool ok = true;
                for (int k = 0; k <= 4 * n; ++k) {
                    long long m = detail::lookup(degree[static_cast<std::size_t>(k)], hw);
                    long long want = listed.count(k) ? 1 : 0;
                    if (m != want) ok = false;
                }
                if (!ok)
                    res.failures.push_back(
                        {res.suite,
                         {n, static_cast<long long>(cand.family == cohomology::Family::exceptional),
                          cand.rep.k(), cand.rep.a(), cand.rep.b()},
                         "candidate degree list disagrees with the form decomposition"});
            }
        }
    }
    res.finish();
    return res;
}

// Dirac kernel descriptions and the dictionary tying signed kernel
// dimensions to Betti-number sums.
inline SuiteResult verify_dirac_betti(const Bounds& bb) {
    SuiteResult res{"betti"};
    using twist::Regime;
    std::uint32_t state = bb.seed ^ 0xd1acd1acu;
    for (int n = bb.n_min; n <= std::min(3, bb.n_max); ++n) {
        QuatDim qn(n);
        for (int d = 0; d <= n; ++d) {
            ++res.cases;
            auto kd = spectra::dirac_kernel(qn, TwistLabel(qn, n - d, d), Regime::positive);
            std::vector<std::array<long long, 2>> got;
            bool coeffs_ok = !kd.extrapolated;
            for (const auto& c : kd.contributors) {
                got.push_back({static_cast<long long>(c.rep.a()), c.index_sign});
                if (c.rep.k() != 0 || c.rep.a() != c.rep.b() ||
                    !c.min_eigenvalue.value.is_zero())
                    coeffs_ok = false;
            }
            std::vector<std::array<long long, 2>> want;
            for (int a = 0; a <= d; ++a)
                want.push_back({a, twist::detail::pow_sign(d)});
            if (got != want || !coeffs_ok) {
                res.failures.push_back({res.suite,
                                        {n, 0, d},
                                        "kernel of the degree-d twist is not {(0,a,a): a <= d}"});
                continue;
            }
            // Dictionary: random kernel dimensions, then compare against the
            // Betti table rebuilt from them.
            for (int t = 0; t < 100; ++t) {
                ++res.cases;
                std::map<IrrepLabel, long long> dims;
                for (int a = 0; a <= n; ++a)
                    dims.emplace(IrrepLabel(qn, 0, a, a), detail::draw(state, 5));
                auto table = cohomology::betti_from_kernel_dims(qn, dims);
                long long bsum = table.total(2 * d) + (d > 0 ? table.total(2 * d - 2) : 0);
                long long ksum = 0, index = 0;
                for (const auto& c : kd.contributors) {
                    ksum += dims.at(c.rep);
                    index += c.index_sign * dims.at(c.rep);
                }
                if (ksum != bsum || index != twist::detail::pow_sign(d) * bsum) {
                    res.failures.push_back({res.suite,
                                            {n, 0, d, t},
                                            "kernel dimensions and Betti sums disagree"});
                    break;
                }
            }
        }
        {
            ++res.cases;
            auto kd = spectra::dirac_kernel(qn, TwistLabel(qn, n + 2, 0), Regime::positive);
            bool ok = kd.contributors.size() == 1 && !kd.extrapolated;
            if (ok) {
                const auto& c = kd.contributors[0];
                ok = c.rep == IrrepLabel(qn, 2, 0, 0) && c.index_sign == 1 &&
                     c.min_eigenvalue.value == Rational(1, 2 * n);
            }
            if (!ok)
                res.failures.push_back({res.suite,
                                        {n, 1, 0},
                                        "kernel at twist (n+2, 0) is not Sym2 H alone"});
        }
        for (int l = 0; l < n; ++l)
            for (int d = 0; l + d < n; ++d) {
                ++res.cases;
                auto kd = spectra::dirac_kernel(qn, TwistLabel(qn, l, d), Regime::positive);
                if (!kd.contributors.empty())
                    res.failures.push_back({res.suite,
                                            {n, 2, l, d},
                                            "low twists must have empty kernel"});
            }
        {
            ++res.cases;
            auto kd = spectra::dirac_kernel(qn, TwistLabel(qn, n, 0), Regime::negative);
            if (!kd.extrapolated)
                res.failures.push_back({res.suite,
                                        {n, 3, 0},
                                        "negative-regime kernel must be flagged extrapolated"});
        }
    }
    res.finish();
    return res;
}

// Betti tables synthesized from kernel dimensions always satisfy the
// vanishing and monotonicity constraints of their regime.
inline SuiteResult verify_betti_property(const Bounds& bb) {
    SuiteResult res{"betti"};
    std::uint32_t state = bb.seed;
    for (long long t = 0; t < bb.trials; ++t) {
        int n = bb.n_min +
                static_cast<int>(detail::draw(state, bb.n_max - bb.n_min + 1));
        QuatDim qn(n);
        for (auto reg : {twist::Regime::positive, twist::Regime::negative}) {
            ++res.cases;
            std::map<IrrepLabel, long long> dims;
            for (int a = 0; a <= n; ++a)
                dims.emplace(IrrepLabel(qn, 0, a, a), detail::draw(state, 5));
            if (reg == twist::Regime::negative)
                for (int a = 0; a <= n; ++a)
                    for (int b = 0; b <= std::min(a, n - 1); ++b)
                        dims.emplace(IrrepLabel(qn, 2 * n - a - b, a, b),
                                     detail::draw(state, 5));
            auto table = cohomology::betti_from_kernel_dims(qn, dims);
            auto check = cohomology::betti_constraints(qn, reg, table);
            if (!check.consistent || !check.warnings.empty())
                res.failures.push_back(
                    {res.suite,
                     {static_cast<long long>(reg == twist::Regime::negative), t, n},
                     "synthesized Betti table violates its regime constraints"});
        }
    }
    res.finish();
    return res;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "fusion", "twists", "index", "extremal", "casimir",
        "hyper",  "bounds", "forms", "betti"};
    return names;
}

inline SuiteResult run_suite(const std::string& name, const Bounds& bb) {
    if (name == "fusion") return verify_fusion(bb);
    if (name == "twists") {
        SuiteResult r = verify_spinor(bb);
        r.absorb(verify_twists(bb));
        r.finish();
        return r;
    }
    if (name == "index") return verify_index(bb);
    if (name == "extremal") return verify_extremal(bb);
    if (name == "casimir") return verify_casimir(bb);
    if (name == "hyper") return verify_hyper(bb);
    if (name == "bounds") return verify_bounds(bb);
    if (name == "forms") return verify_forms(bb);
    if (name == "betti") {
        SuiteResult r = verify_dirac_betti(bb);
        r.absorb(verify_betti_property(bb));
        r.finish();
        return r;
    }
    throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace qk::verify
