#pragma once

/**
 * @file verify.hpp
 * @brief Verification suites. A suite is a list of items, each either
 * verified or carrying counterexamples; counterexamples are results, not
 * errors.
 */

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "cartan/cartan_sequences.hpp"
#include "cartan/cfinite.hpp"
#include "cartan/errors.hpp"
#include "cartan/genfunc.hpp"
#include "cartan/horadam.hpp"
#include "cartan/json_io.hpp"
#include "cartan/report.hpp"
#include "cartan/spinor.hpp"

namespace cartan {

inline constexpr std::int64_t kBinetCheckMaxN = 64;
inline constexpr std::size_t kGfCheckTerms = 32;

struct SuiteItem {
    std::string suite;
    std::string name;
    bool verified = true;
    Json details = Json::object();
    std::vector<Json> counterexamples;
};

/// Binet form against the recurrence for 0 <= n <= 64, Cartan and spinor.
inline std::vector<SuiteItem> suite_binet() {
    std::vector<SuiteItem> out;
    for (const auto name : kTablePresets) {
        SuiteItem item{"binet", std::string(name)};
        const auto ctx = make_context(preset(name));
        const auto cw = cw_terms(ctx.params, kBinetCheckMaxN + 1);
        for (std::int64_t n = 0; n <= kBinetCheckMaxN; ++n) {
            if (!equals_integer_cartan(binet_term(ctx, n), cw[n])) {
                item.counterexamples.push_back(Json::object({{"kind", "cartan"}, {"n", n}}));
            }
            if (spinor_binet(ctx, n) != to_quad(epsilon(cw[n]), ctx.d)) {
                item.counterexamples.push_back(Json::object({{"kind", "spinor"}, {"n", n}}));
            }
        }
        item.verified = item.counterexamples.empty();
        item.details = Json::object({{"n_max", kBinetCheckMaxN}});
        out.push_back(std::move(item));
    }
    return out;
}

inline std::vector<SuiteItem> suite_identities() {
    std::vector<SuiteItem> out;
    for (const auto& r : builtin_identity_suite()) {
        SuiteItem item{"identities", r.def.name};
        item.details = Json::object({{"binding", r.roles.label()}, {"spot_check_ok", r.spot_check_ok}});
        for (std::size_t c = 0; c < 4; ++c) {
            const auto& v = r.coords[c];
            if (v.status == IdentityStatus::verified) continue;
            Json w = to_json(*v.witness);
            w["coord"] = kCartanCoordNames[c];
            item.counterexamples.push_back(std::move(w));
        }
        item.verified = item.counterexamples.empty();
        out.push_back(std::move(item));
    }
    return out;
}

/// Series expansion of both generating functions against the first 32 terms.
inline std::vector<SuiteItem> suite_genfunc() {
    std::vector<SuiteItem> out;
    for (const auto name : kTablePresets) {
        const HoradamParams h = preset(name);
        SuiteItem cartan{"genfunc", "cartan_gf." + std::string(name)};
        const auto cs = series_expand(cartan_gf(h), kGfCheckTerms);
        const auto cw = cw_terms(h, kGfCheckTerms);
        for (std::size_t n = 0; n < kGfCheckTerms; ++n) {
            if (cs[n] != to_rational(cw[n])) cartan.counterexamples.push_back(Json::object({{"n", n}}));
        }
        cartan.verified = cartan.counterexamples.empty();
        out.push_back(std::move(cartan));

        SuiteItem spinor{"genfunc", "spinor_gf." + std::string(name)};
        const auto ss = series_expand(spinor_gf(h), kGfCheckTerms);
        const auto st = spinor_terms(h, kGfCheckTerms);
        for (std::size_t n = 0; n < kGfCheckTerms; ++n) {
            if (ss[n] != st[n]) spinor.counterexamples.push_back(Json::object({{"n", n}}));
        }
        spinor.verified = spinor.counterexamples.empty();
        out.push_back(std::move(spinor));
    }
    return out;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"binet", "identities", "genfunc", "all", "none"};
    return names;
}

inline std::vector<SuiteItem> run_suite(const std::string& suite) {
    if (suite == "binet") return suite_binet();
    if (suite == "identities") return suite_identities();
    if (suite == "genfunc") return suite_genfunc();
    if (suite == "none") return {};
    if (suite == "all") {
        auto out = suite_binet();
        for (auto& i : suite_identities()) out.push_back(std::move(i));
        for (auto& i : suite_genfunc()) out.push_back(std::move(i));
        return out;
    }
    throw invalid_argument("unknown suite '" + suite + "'");
}

inline Json suite_summary(const std::string& suite, const std::vector<SuiteItem>& items) {
    Json j = Json::object();
    j["suite"] = suite;
    j["total"] = items.size();
    std::size_t verified = 0;
    Json counterexamples = Json::array();
    Json listed = Json::array();
    for (const auto& item : items) {
        if (item.verified) ++verified;
        Json row = Json::object({{"suite", item.suite}, {"name", item.name},
                                 {"status", item.verified ? "verified" : "counterexample"}});
        for (const auto& [k, v] : item.details.items()) row[k] = v;
        listed.push_back(std::move(row));
        for (const auto& c : item.counterexamples) {
            Json cx = Json::object({{"suite", item.suite}, {"name", item.name}});
            if (item.details.contains("binding")) cx["binding"] = item.details["binding"];
            for (const auto& [k, v] : c.items()) cx[k] = v;
            counterexamples.push_back(std::move(cx));
        }
    }
    j["verified"] = verified;
    j["counterexamples"] = std::move(counterexamples);
    j["items"] = std::move(listed);
    return j;
}

inline std::string suite_csv(const std::vector<SuiteItem>& items) {
    std::ostringstream os;
    os << "suite,name,status,counterexamples\n";
    for (const auto& item : items) {
        os << item.suite << ",\"" << item.name << "\"," << (item.verified ? "verified" : "counterexample") << ","
           << item.counterexamples.size() << "\n";
    }
    return os.str();
}

inline std::string suite_markdown(const std::string& suite, const std::vector<SuiteItem>& items) {
    std::ostringstream os;
    std::size_t verified = 0;
    for (const auto& item : items) verified += item.verified ? 1 : 0;
    os << "# verify: " << suite << "\n\n" << verified << " of " << items.size() << " verified.\n\n";
    os << "| suite | name | status | counterexamples |\n|---|---|---|---|\n";
    for (const auto& item : items) {
        std::string cx;
        for (const auto& c : item.counterexamples) cx += (cx.empty() ? "" : " ") + c.dump();
        os << "| " << item.suite << " | " << item.name << " | " << (item.verified ? "verified" : "counterexample")
           << " | " << (cx.empty() ? "" : "`" + cx + "`") << " |\n";
    }
    return os.str();
}

}  // namespace cartan
