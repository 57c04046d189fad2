#pragma once

/**
 * @file report.hpp
 * @brief The reconciliation report: every printed constant and closed form
 * next to the value the library computes, grouped into fixed sections.
 *
 * Rendering is deterministic. Sections and entries keep declaration order and
 * JSON objects keep insertion order, so two runs produce identical bytes.
 */

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cartan/cartan_number.hpp"
#include "cartan/cartan_sequences.hpp"
#include "cartan/cfinite.hpp"
#include "cartan/genfunc.hpp"
#include "cartan/horadam.hpp"
#include "cartan/json_io.hpp"
#include "cartan/reconcile.hpp"
#include "cartan/spinor.hpp"

namespace cartan {

inline constexpr std::array<const char*, 5> kReportSections = {"Examples", "Identities", "BinetConstants",
                                                               "GeneratingFunctions", "SpinorForms"};

struct ReportSection {
    std::string name;
    std::vector<ReconEntry> entries;
};

// ---------------------------------------------------------------------------
// Examples
// ---------------------------------------------------------------------------

namespace detail {

struct PrintedCartanExample {
    std::string label;
    std::string preset;
    std::int64_t n;
    std::array<long, 4> value;
};

inline std::vector<PrintedCartanExample> printed_cartan_examples() {
    return {
        {"CP_0", "pell", 0, {0, 1, 2, 5}},
        {"CP_1", "pell", 1, {1, 2, 5, 12}},
        {"CP_2", "pell", 2, {2, 5, 12, 29}},
        {"CP_3", "pell", 3, {5, 12, 29, 70}},
        {"Cp_0", "pell_lucas", 0, {2, 1, 4, 9}},
        {"Cp_1", "pell_lucas", 1, {1, 4, 9, 22}},
        {"Cp_2", "pell_lucas", 2, {4, 9, 22, 53}},
        {"Cp_3", "pell_lucas", 3, {9, 22, 53, 128}},
        {"CJ_0", "jacobsthal", 0, {0, 1, 1, 3}},
        {"CJ_1", "jacobsthal", 1, {1, 1, 3, 5}},
        {"CJ_2", "jacobsthal", 2, {1, 3, 5, 11}},
        {"CJ_3", "jacobsthal", 3, {3, 5, 11, 21}},
        {"Cj_0", "jacobsthal_lucas", 0, {2, 1, 5, 7}},
        {"Cj_1", "jacobsthal_lucas", 1, {1, 5, 7, 17}},
        {"Cj_2", "jacobsthal_lucas", 2, {5, 7, 17, 31}},
        {"Cj_3", "jacobsthal_lucas", 3, {7, 31, 65, 127}},
    };
}

struct PrintedSpinorExample {
    std::string label;
    std::string preset;
    std::int64_t n;
    SpinorQ value;
};

inline std::vector<PrintedSpinorExample> printed_spinor_examples() {
    const Rational h(1, 2);
    return {
        {"SCP_0", "pell", 0, spinor_q(0, Rational(9, 2), -h, 1)},
        {"SCP_1", "pell", 1, spinor_q(1, 11, -1, 2)},
        {"SCp_0", "pell_lucas", 0, spinor_q(2, Rational(17, 2), -h, 1)},
        {"SCp_1", "pell_lucas", 1, spinor_q(1, 20, -2, 4)},
        {"SCJ_0", "jacobsthal", 0, spinor_q(0, Rational(5, 2), -h, 1)},
        {"SCJ_1", "jacobsthal", 1, spinor_q(1, Rational(11, 2), h, 1)},
        {"SCj_0", "jacobsthal_lucas", 0, spinor_q(2, Rational(17, 2), Rational(3, 2), 1)},
        {"SCj_1", "jacobsthal_lucas", 1, spinor_q(1, Rational(31, 2), Rational(-3, 2), 5)},
    };
}

/// The general CW_0 and CW_1 displays in terms of p, q, a, b, transcribed as printed.
inline std::array<CartanNumber<BigInt>, 2> printed_initial_conditions(const HoradamParams& h) {
    const BigInt p = h.p, q = h.q, a = h.a, b = h.b;
    const BigInt w2 = p * b + q * a;
    const BigInt printed_w3 = p * p * b + p * q * a + p * b;
    const BigInt printed_w4 = p * p * p * b + p * p * q * a + 2 * p * b * q * a + q * q * a;
    return {CartanNumber<BigInt>{a, b, w2, printed_w3}, CartanNumber<BigInt>{b, w2, printed_w3, printed_w4}};
}

}  // namespace detail

inline std::vector<ReconEntry> reconcile_examples() {
    std::vector<ReconEntry> out;
    for (const auto& ex : detail::printed_cartan_examples()) {
        const auto printed = cartan_int(ex.value[0], ex.value[1], ex.value[2], ex.value[3]);
        out.push_back(compare_entry("example." + ex.label, printed, cw_term(preset(ex.preset), ex.n)));
    }
    for (const auto& ex : detail::printed_spinor_examples()) {
        out.push_back(compare_entry("example." + ex.label, ex.value, spinor_term(preset(ex.preset), ex.n)));
    }
    for (const auto name : kTablePresets) {
        const HoradamParams h = preset(name);
        const auto printed = detail::printed_initial_conditions(h);
        for (std::int64_t n = 0; n < 2; ++n) {
            out.push_back(compare_entry("initial_condition.CW_" + std::to_string(n) + "." + std::string(name),
                                        printed[n], cw_term(h, n), "general display evaluated at " + to_string(h)));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Identities
// ---------------------------------------------------------------------------

inline Json to_json(const Witness& w) {
    return Json::object({{"n", w.n}, {"lhs", to_json(w.lhs)}, {"rhs", to_json(w.rhs)}});
}

inline Json to_json(const IdentityVerdict& v) {
    Json j = Json::object();
    j["status"] = to_string(v.status);
    j["check_bound"] = v.check_bound;
    if (v.witness) j["witness"] = to_json(*v.witness);
    return j;
}

inline Json identity_coords_json(const IdentityResult& r) {
    Json j = Json::object();
    for (std::size_t c = 0; c < 4; ++c) j[kCartanCoordNames[c]] = to_json(r.coords[c]);
    return j;
}

inline ReconEntry identity_entry(const IdentityResult& r) {
    ReconEntry e;
    e.name = "identity." + r.def.name + "." + r.roles.label();
    e.printed = r.def.printed;
    e.computed = identity_coords_json(r);
    for (std::size_t c = 0; c < 4; ++c) {
        if (r.coords[c].status != IdentityStatus::verified) e.coords.push_back(kCartanCoordNames[c]);
    }
    e.verdict = e.coords.empty() ? Verdict::match : Verdict::mismatch;
    if (r.def.name != r.def.printed) e.note = "variant of the printed identity, not itself printed";
    e.extra["valid_from_n"] = r.def.offset;
    e.extra["spot_checks"] = r.spot_checks;
    e.extra["spot_check_ok"] = r.spot_check_ok;
    return e;
}

inline std::vector<ReconEntry> reconcile_identities() {
    std::vector<ReconEntry> out;
    for (const auto& r : builtin_identity_suite()) out.push_back(identity_entry(r));
    return out;
}

// ---------------------------------------------------------------------------
// Assembly and rendering
// ---------------------------------------------------------------------------

inline std::vector<ReportSection> build_report() {
    return {
        {kReportSections[0], reconcile_examples()},
        {kReportSections[1], reconcile_identities()},
        {kReportSections[2], reconcile_binet_constants()},
        {kReportSections[3], reconcile_gf()},
        {kReportSections[4], reconcile_spinor_forms()},
    };
}

inline Json verdict_counts(const std::vector<ReportSection>& sections) {
    Json j = Json::object({{"entries", 0}, {"match", 0}, {"mismatch", 0}, {"not_comparable", 0}});
    for (const auto& s : sections) {
        for (const auto& e : s.entries) {
            j["entries"] = j["entries"].get<int>() + 1;
            j[to_string(e.verdict)] = j[to_string(e.verdict)].get<int>() + 1;
        }
    }
    return j;
}

inline Json report_json(const std::vector<ReportSection>& sections) {
    Json doc = Json::object();
    doc["title"] = "Cartan Horadam reconciliation report";
    doc["summary"] = verdict_counts(sections);
    Json js = Json::array();
    for (const auto& s : sections) {
        Json entries = Json::array();
        for (const auto& e : s.entries) entries.push_back(to_json(e));
        js.push_back(Json::object({{"name", s.name}, {"entries", std::move(entries)}}));
    }
    doc["sections"] = std::move(js);
    return doc;
}

/// name -> {verdict, coords} over the whole report; the shape of the golden file.
inline Json report_verdicts(const std::vector<ReportSection>& sections) {
    Json j = Json::object();
    for (const auto& s : sections) {
        for (const auto& e : s.entries) j[e.name] = Json::object({{"verdict", to_string(e.verdict)}, {"coords", e.coords}});
    }
    return j;
}

namespace detail {

inline std::string md_cell(const Json& value) {
    std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    std::string out;
    for (char ch : text) {
        if (ch == '|') out += "\\|";
        else out += ch;
    }
    return "`" + out + "`";
}

inline std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? sep : "") + xs[k];
    return out;
}

}  // namespace detail

inline std::string report_markdown(const std::vector<ReportSection>& sections) {
    std::ostringstream os;
    const Json counts = verdict_counts(sections);
    os << "# Cartan Horadam reconciliation report\n\n";
    os << counts["entries"].get<int>() << " entries: " << counts["match"].get<int>() << " match, "
       << counts["mismatch"].get<int>() << " mismatch, " << counts["not_comparable"].get<int>()
       << " not comparable.\n";
    for (const auto& s : sections) {
        os << "\n## " << s.name << "\n\n";
        os << "| name | printed | computed | verdict | coords | note |\n";
        os << "|---|---|---|---|---|---|\n";
        for (const auto& e : s.entries) {
            os << "| " << e.name << " | " << detail::md_cell(e.printed) << " | " << detail::md_cell(e.computed)
               << " | " << to_string(e.verdict) << " | " << detail::join(e.coords, ", ") << " | " << e.note
               << " |\n";
        }
    }
    return os.str();
}

inline std::string report_csv(const std::vector<ReportSection>& sections) {
    std::ostringstream os;
    os << "section,name,verdict,coords\n";
    for (const auto& s : sections) {
        for (const auto& e : s.entries) {
            os << s.name << ",\"" << e.name << "\"," << to_string(e.verdict) << ",\"" << detail::join(e.coords, " ")
               << "\"\n";
        }
    }
    return os.str();
}

}  // namespace cartan
