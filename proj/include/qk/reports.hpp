#pragma once

// Serialization of the domain types for the command-line tool.  JSON output
// uses nlohmann::json whose object keys are stored sorted, so every rendering
// of the same data is byte-identical.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qk/cohomology.hpp"
#include "qk/labels.hpp"
#include "qk/spectra.hpp"
#include "qk/twists.hpp"
#include "qk/verify.hpp"
#include "qk/weyl.hpp"

namespace qk::report {

using nlohmann::json;

inline json to_json(const Rational& q) {
    return json{{"num", q.num()}, {"den", q.den()}};
}

inline json to_json(const IrrepLabel& rep) {
    return json{{"k", rep.k()}, {"a", rep.a()}, {"b", rep.b()}};
}

inline json to_json(const TwistLabel& tw) {
    return json{{"l", tw.l()}, {"d", tw.d()}};
}

inline std::vector<int> trimmed_tail(const weyl::WeightVec& hw) {
    std::vector<int> tail(hw.begin() + 1, hw.end());
    while (!tail.empty() && tail.back() == 0) tail.pop_back();
    return tail;
}

inline json character_json(const weyl::WeylOracle& oracle, const weyl::VirtualCharacter& vc) {
    json arr = json::array();
    long long dim = 0;
    for (const auto& [hw, mult] : vc) {
        json entry;
        entry["k"] = hw[0];
        entry["weight"] = trimmed_tail(hw);
        entry["mult"] = mult;
        entry["dim"] = oracle.irrep_dim(hw);
        arr.push_back(entry);
        dim += mult * oracle.irrep_dim(hw);
    }
    return json{{"dim", dim}, {"constituents", arr}};
}

inline json to_json(const twist::ExtremalReport& rpt) {
    json twists = json::array();
    for (const auto& et : rpt.twists)
        twists.push_back(json{{"l", et.twist.l()}, {"d", et.twist.d()}, {"index", et.index}});
    return json{{"rep", to_json(rpt.rep)},
                {"regime", twist::regime_name(rpt.regime)},
                {"class", twist::extremal_class_name(rpt.cls)},
                {"phi", rpt.phi_value},
                {"twists", twists}};
}

inline json to_json(const spectra::LaplaceBound& lb) {
    json j = to_json(lb.extremal);
    j["coefficient"] = to_json(lb.coeff.value);
    return j;
}

inline json to_json(const spectra::KernelDescription& kd) {
    json contributors = json::array();
    for (const auto& c : kd.contributors)
        contributors.push_back(json{{"rep", to_json(c.rep)},
                                    {"eigenvalue", to_json(c.min_eigenvalue.value)},
                                    {"sign", c.index_sign}});
    return json{{"twist", to_json(kd.twist)},
                {"regime", twist::regime_name(kd.regime)},
                {"extrapolated", kd.extrapolated},
                {"contributors", contributors}};
}

inline json to_json(const cohomology::HarmonicCandidate& cand) {
    return json{{"rep", to_json(cand.rep)},
                {"family", cohomology::family_name(cand.family)},
                {"degrees", cand.degrees}};
}

inline json to_json(const cohomology::BettiCheck& check) {
    json violations = json::array();
    for (const auto& v : check.violations)
        violations.push_back(
            json{{"constraint", v.constraint}, {"degree", v.degree}, {"detail", v.detail}});
    json warnings = json::array();
    for (const auto& v : check.warnings)
        warnings.push_back(
            json{{"constraint", v.constraint}, {"degree", v.degree}, {"detail", v.detail}});
    return json{{"consistent", check.consistent},
                {"violations", violations},
                {"warnings", warnings}};
}

inline json to_json(const verify::SuiteResult& res) {
    json failures = json::array();
    for (const auto& f : res.failures)
        failures.push_back(json{{"tuple", f.tuple}, {"detail", f.detail}});
    return json{{"suite", res.suite},
                {"cases", res.cases},
                {"ok", res.ok()},
                {"failures", failures}};
}

// Plain-text table with left-aligned, space-padded columns.
inline std::string render_table(const std::vector<std::string>& header,
                                const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < width.size(); ++c) {
            std::string cell = c < row.size() ? row[c] : "";
            out << cell;
            if (c + 1 < width.size()) out << std::string(width[c] - cell.size() + 2, ' ');
        }
        out << '\n';
    };
    line(header);
    std::vector<std::string> rule;
    for (std::size_t c = 0; c < width.size(); ++c) rule.push_back(std::string(width[c], '-'));
    line(rule);
    for (const auto& row : rows) line(row);
    return out.str();
}

inline std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char ch : cell) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

inline std::string render_csv(const std::vector<std::string>& header,
                              const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << csv_escape(row[c]);
        }
        out << '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
    return out.str();
}

inline std::string weight_string(const std::vector<int>& parts) {
    std::string out = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts[i]);
    }
    out += ")";
    return out;
}

// Rows "k, weight, mult, dim" for a decomposed character.
inline std::vector<std::vector<std::string>> character_rows(const weyl::WeylOracle& oracle,
                                                            const weyl::VirtualCharacter& vc) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [hw, mult] : vc) {
        rows.push_back({std::to_string(hw[0]), weight_string(trimmed_tail(hw)),
                        std::to_string(mult), std::to_string(oracle.irrep_dim(hw))});
    }
    return rows;
}

}  // namespace qk::report
