// qk: exact-arithmetic calculator for twisted spinor spectra over the
// holonomy group Sp(1)Sp(n).  Every number printed is an integer or an exact
// rational; nothing is floating point.
//
// Exit codes: 0 success, 1 verification found a counterexample or a Betti
// table violated a constraint, 2 bad usage or malformed input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qk/cohomology.hpp"
#include "qk/fusion.hpp"
#include "qk/labels.hpp"
#include "qk/reports.hpp"
#include "qk/spectra.hpp"
#include "qk/twists.hpp"
#include "qk/verify.hpp"
#include "qk/weyl.hpp"

namespace {

using nlohmann::json;
using qk::IrrepLabel;
using qk::QuatDim;
using qk::Rational;
using qk::TwistLabel;

struct Common {
    int n = 2;
    std::string format = "pretty";
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("-n,--rank", c.n, "quaternionic dimension n (>= 2)")
        ->required()
        ->check(CLI::Range(2, 64));
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
}

void add_rep(CLI::App* sub, int& k, int& a, int& b) {
    sub->add_option("-k", k, "Sym^k H label")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("-a", a, "first column length of L(a,b)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sub->add_option("-b", b, "second column length of L(a,b)")
        ->required()
        ->check(CLI::NonNegativeNumber);
}

void add_twist(CLI::App* sub, int& l, int& d) {
    sub->add_option("-l", l, "Sym^l H twist degree")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("-d", d, "Lambda^d_0 E twist degree")
        ->required()
        ->check(CLI::NonNegativeNumber);
}

qk::twist::Regime add_sign(CLI::App* sub, std::string& sign) {
    sub->add_option("--sign", sign, "sign of the scalar curvature")
        ->check(CLI::IsMember({"pos", "neg"}));
    return qk::twist::Regime::positive;
}

qk::twist::Regime parse_sign(const std::string& sign) {
    return sign == "neg" ? qk::twist::Regime::negative : qk::twist::Regime::positive;
}

void emit(const Common& c, const json& j, const std::vector<std::string>& header,
          const std::vector<std::vector<std::string>>& rows) {
    if (c.format == "json")
        std::cout << j.dump(2) << "\n";
    else if (c.format == "csv")
        std::cout << qk::report::render_csv(header, rows);
    else
        std::cout << qk::report::render_table(header, rows);
}

void emit_character(const Common& c, const qk::weyl::WeylOracle& oracle,
                    const qk::weyl::VirtualCharacter& vc) {
    emit(c, qk::report::character_json(oracle, vc), {"k", "weight", "mult", "dim"},
         qk::report::character_rows(oracle, vc));
}

std::vector<std::vector<std::string>> extremal_rows(const qk::twist::ExtremalReport& rpt) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& et : rpt.twists)
        rows.push_back({std::to_string(et.twist.l()), std::to_string(et.twist.d()),
                        std::to_string(et.index)});
    return rows;
}

std::string degrees_string(const std::vector<int>& deg) {
    std::string s;
    for (std::size_t i = 0; i < deg.size(); ++i) {
        if (i)
            s += " ";
        s += std::to_string(deg[i]);
    }
    return s;
}

int run_verify(const std::string& suite, const qk::verify::Bounds& bb,
               const std::string& format) {
    std::vector<std::string> names;
    if (suite == "all")
        names = qk::verify::suite_names();
    else
        names.push_back(suite);

    json all = json::array();
    bool failed = false;
    for (const std::string& name : names) {
        qk::verify::SuiteResult res = qk::verify::run_suite(name, bb);
        if (!res.ok())
            failed = true;
        if (format == "json") {
            all.push_back(qk::report::to_json(res));
            continue;
        }
        if (res.ok()) {
            std::printf("ok    %-10s %lld cases\n", res.suite.c_str(), res.cases);
        } else {
            // failures are sorted; the front one is the lexicographically
            // minimal counterexample
            const qk::verify::Failure& f = res.failures.front();
            std::string tuple = "(";
            for (std::size_t i = 0; i < f.tuple.size(); ++i) {
                if (i)
                    tuple += ",";
                tuple += std::to_string(f.tuple[i]);
            }
            tuple += ")";
            std::printf("FAIL  %-10s %lld cases, %zu failures; minimal counterexample %s: %s\n",
                        res.suite.c_str(), res.cases, res.failures.size(), tuple.c_str(),
                        f.detail.c_str());
        }
    }
    if (format == "json")
        std::cout << all.dump(2) << "\n";
    return failed ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for twisted Dirac and Laplace spectra under Sp(1)Sp(n)"};
    app.require_subcommand(1);
    int rc = 0;

    // decompose-spinor
    Common sp_c;
    std::string sp_half = "full";
    auto* sp = app.add_subcommand("decompose-spinor",
                                  "irreducible summands of the spinor module");
    add_common(sp, sp_c);
    sp->add_option("--half", sp_half, "full spinor module or one half")
        ->check(CLI::IsMember({"full", "plus", "minus"}));
    sp->callback([&] {
        QuatDim n(sp_c.n);
        qk::weyl::WeylOracle oracle(qk::weyl::sp1xspn_group(n));
        qk::weyl::VirtualCharacter vc =
            sp_half == "full" ? qk::weyl::spinor_character(n)
                              : qk::weyl::half_spinor_character(n, sp_half == "plus");
        emit_character(sp_c, oracle, vc);
    });

    // decompose-forms
    Common fo_c;
    int fo_deg = 0;
    auto* fo = app.add_subcommand("decompose-forms",
                                  "irreducible summands of the degree-k form bundle");
    add_common(fo, fo_c);
    fo->add_option("-k,--degree", fo_deg, "form degree, 0..4n")
        ->required()
        ->check(CLI::NonNegativeNumber);
    fo->callback([&] {
        QuatDim n(fo_c.n);
        if (fo_deg > 4 * n.value())
            throw CLI::ValidationError("--degree", "form degree exceeds 4n");
        qk::weyl::WeylOracle oracle(qk::weyl::sp1xspn_group(n));
        emit_character(fo_c, oracle, qk::cohomology::forms_decomposition(n, fo_deg, oracle));
    });

    // fuse
    Common fu_c;
    int fu_cdeg = 0, fu_ddeg = 0;
    auto* fu = app.add_subcommand(
        "fuse", "fusion rule Lambda^c_0 E (x) Lambda^d_0 E = sum L(a,b)");
    add_common(fu, fu_c);
    fu->add_option("-c", fu_cdeg, "first exterior degree")->required()->check(CLI::NonNegativeNumber);
    fu->add_option("-d", fu_ddeg, "second exterior degree")->required()->check(CLI::NonNegativeNumber);
    fu->callback([&] {
        QuatDim n(fu_c.n);
        auto pairs = qk::fusion::fuse_exterior(n, fu_cdeg, fu_ddeg);
        json arr = json::array();
        std::vector<std::vector<std::string>> rows;
        long long total = 0;
        for (auto [a, b] : pairs) {
            long long dim = qk::irrep_dimension(n, IrrepLabel(n, 0, a, b));
            arr.push_back(json{{"a", a}, {"b", b}, {"dim", dim}});
            rows.push_back({std::to_string(a), std::to_string(b), std::to_string(dim)});
            total += dim;
        }
        emit(fu_c, json{{"n", n.value()}, {"c", fu_cdeg}, {"d", fu_ddeg},
                        {"dim", total}, {"constituents", arr}},
             {"a", "b", "dim"}, rows);
    });

    // admissible
    Common ad_c;
    int ad_k = 0, ad_a = 0, ad_b = 0, ad_l = 0, ad_d = 0;
    auto* ad = app.add_subcommand(
        "admissible", "multiplicity interval of a type in a twisted spinor module");
    add_common(ad, ad_c);
    add_rep(ad, ad_k, ad_a, ad_b);
    add_twist(ad, ad_l, ad_d);
    ad->callback([&] {
        QuatDim n(ad_c.n);
        IrrepLabel rep(n, ad_k, ad_a, ad_b);
        TwistLabel tw(n, ad_l, ad_d);
        bool adm = qk::twist::is_admissible(n, rep, tw);
        auto iv = qk::twist::multiplicity_set(n, rep, tw);
        long long idx = qk::twist::index_multiplicity(n, rep, tw);
        json j{{"admissible", adm}, {"cardinality", iv.cardinality()}, {"index", idx}};
        std::vector<std::vector<std::string>> rows;
        if (adm) {
            j["lo"] = iv.lo;
            j["hi"] = iv.hi;
            j["parity"] = iv.parity;
            rows.push_back({"yes", std::to_string(iv.lo), std::to_string(iv.hi),
                            std::to_string(iv.parity), std::to_string(iv.cardinality()),
                            std::to_string(idx)});
        } else {
            rows.push_back({"no", "-", "-", "-", "0", "0"});
        }
        emit(ad_c, j, {"admissible", "lo", "hi", "parity", "count", "index"}, rows);
    });

    // index
    Common ix_c;
    int ix_k = 0, ix_a = 0, ix_b = 0, ix_l = 0, ix_d = 0;
    auto* ix = app.add_subcommand(
        "index", "signed multiplicity of a type in the twisted index character");
    add_common(ix, ix_c);
    add_rep(ix, ix_k, ix_a, ix_b);
    add_twist(ix, ix_l, ix_d);
    ix->callback([&] {
        QuatDim n(ix_c.n);
        long long v = qk::twist::index_multiplicity(n, IrrepLabel(n, ix_k, ix_a, ix_b),
                                                    TwistLabel(n, ix_l, ix_d));
        if (ix_c.format == "json")
            std::cout << json{{"index", v}}.dump(2) << "\n";
        else
            std::cout << v << "\n";
    });

    // extremal
    Common ex_c;
    int ex_k = 0, ex_a = 0, ex_b = 0;
    std::string ex_sign = "pos";
    auto* ex = app.add_subcommand(
        "extremal", "admissible twists extremizing the curvature weight phi");
    add_common(ex, ex_c);
    add_rep(ex, ex_k, ex_a, ex_b);
    add_sign(ex, ex_sign);
    ex->callback([&] {
        QuatDim n(ex_c.n);
        IrrepLabel rep(n, ex_k, ex_a, ex_b);
        auto rpt = parse_sign(ex_sign) == qk::twist::Regime::positive
                       ? qk::twist::maximal_twists(n, rep)
                       : qk::twist::minimal_twists(n, rep);
        if (ex_c.format == "pretty")
            std::printf("class %s, phi = %lld\n", qk::twist::extremal_class_name(rpt.cls),
                        rpt.phi_value);
        emit(ex_c, qk::report::to_json(rpt), {"l", "d", "index"}, extremal_rows(rpt));
    });

    // bound
    Common bo_c;
    int bo_k = 0, bo_a = 0, bo_b = 0;
    std::string bo_sign = "pos";
    auto* bo = app.add_subcommand(
        "bound", "sharp lower bound coefficient for the Laplace spectrum on a type");
    add_common(bo, bo_c);
    add_rep(bo, bo_k, bo_a, bo_b);
    add_sign(bo, bo_sign);
    bo->callback([&] {
        QuatDim n(bo_c.n);
        auto lb = qk::spectra::laplace_bound(n, IrrepLabel(n, bo_k, bo_a, bo_b),
                                             parse_sign(bo_sign));
        if (bo_c.format == "pretty")
            std::printf("lambda >= %s * kappa  (kappa %s, class %s)\n",
                        lb.coeff.value.str().c_str(),
                        qk::twist::regime_name(lb.coeff.regime),
                        qk::twist::extremal_class_name(lb.extremal.cls));
        emit(bo_c, qk::report::to_json(lb), {"l", "d", "index"}, extremal_rows(lb.extremal));
    });

    // dirac-kernel
    Common dk_c;
    int dk_l = 0, dk_d = 0;
    std::string dk_sign = "pos";
    auto* dk = app.add_subcommand(
        "dirac-kernel", "types that can appear in the kernel of the twisted Dirac operator");
    add_common(dk, dk_c);
    add_twist(dk, dk_l, dk_d);
    add_sign(dk, dk_sign);
    dk->callback([&] {
        QuatDim n(dk_c.n);
        auto kd = qk::spectra::dirac_kernel(n, TwistLabel(n, dk_l, dk_d), parse_sign(dk_sign));
        std::vector<std::vector<std::string>> rows;
        for (const auto& c : kd.contributors)
            rows.push_back({std::to_string(c.rep.k()), std::to_string(c.rep.a()),
                            std::to_string(c.rep.b()), c.min_eigenvalue.value.str(),
                            std::to_string(c.index_sign)});
        if (dk_c.format == "pretty" && kd.extrapolated)
            std::printf("negative regime: mirrored from the positive-curvature argument\n");
        emit(dk_c, qk::report::to_json(kd), {"k", "a", "b", "eigenvalue", "sign"}, rows);
    });

    // harmonic-candidates
    Common hc_c;
    std::string hc_sign = "pos";
    auto* hc = app.add_subcommand(
        "harmonic-candidates", "types whose harmonic forms survive the curvature bounds");
    add_common(hc, hc_c);
    add_sign(hc, hc_sign);
    hc->callback([&] {
        QuatDim n(hc_c.n);
        auto cands = qk::cohomology::harmonic_candidates(n, parse_sign(hc_sign));
        json arr = json::array();
        std::vector<std::vector<std::string>> rows;
        for (const auto& c : cands) {
            arr.push_back(qk::report::to_json(c));
            rows.push_back({std::to_string(c.rep.k()), std::to_string(c.rep.a()),
                            std::to_string(c.rep.b()), qk::cohomology::family_name(c.family),
                            degrees_string(c.degrees)});
        }
        emit(hc_c, arr, {"k", "a", "b", "family", "degrees"}, rows);
    });

    // betti-check
    Common bc_c;
    std::string bc_sign = "pos";
    std::string bc_input;
    auto* bc = app.add_subcommand(
        "betti-check", "check a Betti table (csv: degree,b_sp1,b_expt) against the constraints");
    add_common(bc, bc_c);
    add_sign(bc, bc_sign);
    bc->add_option("--input", bc_input, "csv file, or - for stdin")->required();
    bc->callback([&] {
        QuatDim n(bc_c.n);
        qk::cohomology::BettiTable table(n);
        if (bc_input == "-") {
            table = qk::cohomology::BettiTable::from_csv(std::cin, n);
        } else {
            std::ifstream in(bc_input);
            if (!in)
                throw CLI::ValidationError("--input", "cannot open " + bc_input);
            table = qk::cohomology::BettiTable::from_csv(in, n);
        }
        auto check = qk::cohomology::betti_constraints(n, parse_sign(bc_sign), table);
        std::vector<std::vector<std::string>> rows;
        for (const auto& v : check.violations)
            rows.push_back({"violation", v.constraint, std::to_string(v.degree), v.detail});
        for (const auto& v : check.warnings)
            rows.push_back({"warning", v.constraint, std::to_string(v.degree), v.detail});
        if (bc_c.format == "pretty" && check.consistent && check.warnings.empty()) {
            std::printf("consistent\n");
        } else {
            emit(bc_c, qk::report::to_json(check),
                 {"severity", "constraint", "degree", "detail"}, rows);
        }
        if (!check.consistent)
            rc = 1;
    });

    // verify
    std::string ve_suite = "all";
    std::string ve_format = "pretty";
    qk::verify::Bounds bb;
    auto* ve = app.add_subcommand("verify",
                                  "cross-check the closed-form rules against the character oracle");
    {
        std::vector<std::string> choices = qk::verify::suite_names();
        choices.push_back("all");
        ve->add_option("--suite", ve_suite, "suite to run")->check(CLI::IsMember(choices));
    }
    ve->add_option("--n-min", bb.n_min, "smallest rank")->check(CLI::Range(2, 64));
    ve->add_option("--n-max", bb.n_max, "largest rank")->check(CLI::Range(2, 64));
    ve->add_option("--k-max", bb.k_max, "largest Sp(1) label (default 2n+2)");
    ve->add_option("--l-max", bb.l_max, "largest twist degree (default 2n+2)");
    ve->add_option("--trials", bb.trials, "randomized trials for property suites")
        ->check(CLI::NonNegativeNumber);
    ve->add_option("--threads", bb.threads, "worker threads (0: hardware)")
        ->check(CLI::NonNegativeNumber);
    ve->add_option("--seed", bb.seed, "seed for randomized trials");
    ve->add_option("--format", ve_format, "output format")
        ->check(CLI::IsMember({"json", "pretty"}));
    ve->callback([&] {
        if (bb.n_min > bb.n_max)
            throw CLI::ValidationError("--n-min", "exceeds --n-max");
        rc = run_verify(ve_suite, bb, ve_format);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return rc;
}
