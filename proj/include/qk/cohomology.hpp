#pragma once

#include <cctype>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qk/labels.hpp"
#include "qk/twists.hpp"
#include "qk/weyl.hpp"

// Form-bundle bookkeeping: which summands occur in Lambda^k T*, which ones
// can carry harmonic forms in each curvature regime, where they sit in the
// degree grading, and what that forces on Betti numbers.

namespace qk::cohomology {

enum class Family {
    sp1_invariant, // L(a,a), trivial Sym^0 H factor
    exceptional    // Sym^{2n-a-b} H (x) L(a,b), b < n
};

inline const char* family_name(Family f) {
    return f == Family::sp1_invariant ? "sp1_invariant" : "exceptional";
}

// Degrees where L(a,a) embeds in forms: 2a, 2a+4, ..., 4n-2a.
inline std::vector<int> sp1_degrees(QuatDim n, int a) {
    std::vector<int> out;
    for (int k = 2 * a; k <= 4 * n.value() - 2 * a; k += 4)
        out.push_back(k);
    return out;
}

// Degrees where Sym^{2n-a-b} H (x) L(a,b) embeds: 2n-(a-b), ..., 2n+(a-b).
inline std::vector<int> exceptional_degrees(QuatDim n, int a, int b) {
    std::vector<int> out;
    for (int k = 2 * n.value() - (a - b); k <= 2 * n.value() + (a - b); k += 2)
        out.push_back(k);
    return out;
}

struct HarmonicCandidate {
    IrrepLabel rep;
    Family family;
    std::vector<int> degrees; // multiplicity one in each
};

// Types whose harmonic forms survive the curvature bounds.  Positive
// curvature leaves only the Sp(1)-invariant family; negative curvature
// additionally admits the exceptional family (b < n; the type L(n,n) is
// already in the invariant family).
inline std::vector<HarmonicCandidate> harmonic_candidates(QuatDim n,
                                                          twist::Regime regime) {
    std::vector<HarmonicCandidate> out;
    for (int a = 0; a <= n.value(); ++a)
        out.push_back({IrrepLabel(n, 0, a, a), Family::sp1_invariant,
                       sp1_degrees(n, a)});
    if (regime == twist::Regime::negative)
        for (int a = 0; a <= n.value(); ++a)
            for (int b = 0; b <= a && b < n.value(); ++b)
                out.push_back({IrrepLabel(n, 2 * n.value() - a - b, a, b),
                               Family::exceptional, exceptional_degrees(n, a, b)});
    return out;
}

// Oracle decomposition of Lambda^k (H (x) E).
inline weyl::VirtualCharacter forms_decomposition(QuatDim n, int k,
                                                  const weyl::WeylOracle& oracle) {
    return oracle.decompose(
        weyl::WeylOracle::exterior_power(weyl::hxe_weights(n), k));
}

// Total multiplicity of rep across all form degrees, from the closed-form
// multiplicity intervals of the twists (r, n-r): the full form bundle is the
// spinor square S (x) S.
inline long long total_multiplicity_in_forms(QuatDim n, const IrrepLabel& rep) {
    long long total = 0;
    for (int r = 0; r <= n.value(); ++r)
        total += twist::multiplicity_set(n, rep,
                                         TwistLabel(n, r, n.value() - r))
                     .cardinality();
    return total;
}

// Betti numbers split by contributing family, degrees 0..4n.
class BettiTable {
public:
    explicit BettiTable(QuatDim n)
        : n_(n.value()), sp1_(4 * n.value() + 1, 0), expt_(4 * n.value() + 1, 0) {}

    int n() const { return n_; }
    int max_degree() const { return 4 * n_; }

    long long sp1(int k) const { return in_range(k) ? sp1_[k] : 0; }
    long long expt(int k) const { return in_range(k) ? expt_[k] : 0; }
    long long total(int k) const { return sp1(k) + expt(k); }

    void set(int k, long long b_sp1, long long b_expt) {
        check_entry(k, b_sp1, b_expt);
        sp1_[k] = b_sp1;
        expt_[k] = b_expt;
    }

    void add(int k, long long b_sp1, long long b_expt) {
        check_entry(k, b_sp1, b_expt);
        sp1_[k] += b_sp1;
        expt_[k] += b_expt;
    }

    // Rows "degree,b_sp1,b_expt"; an optional header is skipped, missing
    // degrees are zero, duplicates and out-of-range degrees are malformed.
    static BettiTable from_csv(std::istream& in, QuatDim n) {
        BettiTable t(n);
        std::vector<bool> seen(t.max_degree() + 1, false);
        std::string line;
        bool first = true;
        while (std::getline(in, line)) {
            if (line.empty() || line == "\r")
                continue;
            if (first && !std::isdigit(static_cast<unsigned char>(line[0]))) {
                first = false;
                continue; // header row
            }
            first = false;
            std::istringstream row(line);
            std::string cell;
            long long vals[3];
            for (int c = 0; c < 3; ++c) {
                if (!std::getline(row, cell, ','))
                    throw std::invalid_argument("malformed Betti row: " + line);
                try {
                    vals[c] = std::stoll(cell);
                } catch (const std::exception&) {
                    throw std::invalid_argument("malformed Betti row: " + line);
                }
            }
            if (std::getline(row, cell, ','))
                throw std::invalid_argument("malformed Betti row: " + line);
            int k = static_cast<int>(vals[0]);
            if (k < 0 || k > t.max_degree())
                throw std::invalid_argument("Betti degree out of range: " + line);
            if (seen[k])
                throw std::invalid_argument("duplicate Betti degree: " + line);
            seen[k] = true;
            t.set(k, vals[1], vals[2]);
        }
        return t;
    }

    std::string to_csv() const {
        std::string s = "degree,b_sp1,b_expt\n";
        for (int k = 0; k <= max_degree(); ++k)
            s += std::to_string(k) + "," + std::to_string(sp1_[k]) + "," +
                 std::to_string(expt_[k]) + "\n";
        return s;
    }

private:
    bool in_range(int k) const { return k >= 0 && k <= max_degree(); }

    void check_entry(int k, long long b_sp1, long long b_expt) {
        if (!in_range(k))
            throw std::invalid_argument("Betti degree out of range");
        if (b_sp1 < 0 || b_expt < 0)
            throw std::invalid_argument("Betti numbers must be nonnegative");
    }

    int n_;
    std::vector<long long> sp1_, expt_;
};

struct ConstraintViolation {
    std::string constraint;
    int degree;
    std::string detail;
};

struct BettiCheck {
    bool consistent = true;
    std::vector<ConstraintViolation> violations;
    std::vector<ConstraintViolation> warnings; // Poincare symmetry only
};

inline BettiCheck betti_constraints(QuatDim n, twist::Regime regime,
                                    const BettiTable& t) {
    BettiCheck out;
    auto violate = [&](const char* id, int k, const std::string& detail) {
        out.violations.push_back({id, k, detail});
        out.consistent = false;
    };
    int N = n.value();
    if (regime == twist::Regime::positive) {
        for (int k = 1; k <= 4 * N; k += 2)
            if (t.total(k) != 0)
                violate("odd_betti_vanishes", k,
                        "b_" + std::to_string(k) + " = " +
                            std::to_string(t.total(k)));
        for (int k = 0; k <= 4 * N; ++k)
            if (t.expt(k) != 0)
                violate("no_exceptional_classes", k,
                        "b_expt," + std::to_string(k) + " = " +
                            std::to_string(t.expt(k)));
        for (int k = 2; k <= N; ++k)
            if (t.total(2 * k) < t.total(2 * k - 4))
                violate("even_betti_ascend_step4", 2 * k,
                        "b_" + std::to_string(2 * k) + " < b_" +
                            std::to_string(2 * k - 4));
    } else {
        for (int k = 1; k <= 4 * N; k += 2)
            if (t.sp1(k) != 0)
                violate("sp1_odd_vanishes", k,
                        "b_sp1," + std::to_string(k) + " = " +
                            std::to_string(t.sp1(k)));
        for (int k = 0; k <= N - 1; ++k)
            if (t.expt(k) != 0)
                violate("exceptional_low_degree_vanishes", k,
                        "b_expt," + std::to_string(k) + " = " +
                            std::to_string(t.expt(k)));
        for (int k = 0; k <= 2 * N - 2; ++k)
            if (t.sp1(k) > t.sp1(k + 4))
                violate("sp1_ascend_step4", k,
                        "b_sp1," + std::to_string(k) + " > b_sp1," +
                            std::to_string(k + 4));
        for (int k = 0; k <= 2 * N - 1; ++k)
            if (t.expt(k) > t.expt(k + 2))
                violate("exceptional_ascend_step2", k,
                        "b_expt," + std::to_string(k) + " > b_expt," +
                            std::to_string(k + 2));
        for (int k = 1; k <= N - 1; k += 2)
            if (t.total(k) != 0)
                violate("low_odd_betti_vanishes", k,
                        "b_" + std::to_string(k) + " = " +
                            std::to_string(t.total(k)));
    }
    for (int k = 0; 2 * k <= 4 * N; ++k)
        if (t.total(k) != t.total(4 * N - k))
            out.warnings.push_back(
                {"poincare_symmetry", k,
                 "b_" + std::to_string(k) + " != b_" + std::to_string(4 * N - k)});
    return out;
}

// Betti table implied by kernel dimensions of the candidate Laplacians:
// each candidate contributes its kernel dimension to every degree in its
// embedding list.  The output satisfies betti_constraints by construction.
inline BettiTable betti_from_kernel_dims(QuatDim n,
                                         const std::map<IrrepLabel, long long>& dims) {
    BettiTable t(n);
    for (const auto& [rep, dim] : dims) {
        if (dim < 0)
            throw std::invalid_argument("kernel dimensions must be nonnegative");
        if (rep.k() == 0 && rep.a() == rep.b()) {
            for (int k : sp1_degrees(n, rep.a()))
                t.add(k, dim, 0);
        } else if (rep.k() == 2 * n.value() - rep.a() - rep.b()) {
            for (int k : exceptional_degrees(n, rep.a(), rep.b()))
                t.add(k, 0, dim);
        } else {
            throw std::invalid_argument("not a harmonic candidate: " + rep.str());
        }
    }
    return t;
}

} // namespace qk::cohomology
