// cartan: emit Horadam / Cartan / spinor sequences, run verification suites,
// and print the reconciliation report.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "cartan/cartan_sequences.hpp"
#include "cartan/errors.hpp"
#include "cartan/horadam.hpp"
#include "cartan/json_io.hpp"
#include "cartan/report.hpp"
#include "cartan/spinor.hpp"
#include "cartan/verify.hpp"

namespace {

using namespace cartan;

struct Range {
    std::int64_t from = 0;
    std::int64_t to = 10;
};

Range parse_range(const std::string& text) {
    static const std::regex re(R"((\d+)\.\.(\d+))");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw invalid_argument("range must look like A..B, got '" + text + "'");
    Range r;
    try {
        r.from = std::stoll(m[1]);
        r.to = std::stoll(m[2]);
    } catch (const std::out_of_range&) {
        throw invalid_argument("range bound out of range in '" + text + "'");
    }
    if (r.from >= r.to) throw invalid_argument("empty range '" + text + "' (need A < B)");
    return r;
}

struct SeqOptions {
    std::string preset;
    std::optional<std::int64_t> p, q, a, b;
    std::string kind = "cartan";
    std::string range = "0..10";
};

HoradamParams resolve_params(const SeqOptions& o) {
    const bool any_custom = o.p || o.q || o.a || o.b;
    const bool all_custom = o.p && o.q && o.a && o.b;
    if (o.preset.empty() || o.preset == "custom") {
        if (!all_custom) throw invalid_argument("custom parameters need all of --p --q --a --b");
        return HoradamParams{*o.p, *o.q, *o.a, *o.b};
    }
    if (any_custom) throw invalid_argument("--p/--q/--a/--b only apply with --preset custom");
    return preset(o.preset);
}

/// H_from .. H_{to+2}: two logarithmic-time terms, then the recurrence.
std::vector<BigInt> horadam_window(const HoradamParams& h, const Range& r, std::size_t extra) {
    std::vector<BigInt> hs;
    const auto count = static_cast<std::size_t>(r.to - r.from) + extra;
    hs.reserve(count);
    hs.push_back(term_fast(h, r.from));
    hs.push_back(term_fast(h, r.from + 1));
    const BigInt p = h.p, q = h.q;
    while (hs.size() < count) hs.push_back(p * hs[hs.size() - 1] + q * hs[hs.size() - 2]);
    hs.resize(count);
    return hs;
}

std::string cmd_seq(const SeqOptions& o, const std::string& format) {
    const HoradamParams h = resolve_params(o);
    const Range r = parse_range(o.range);
    const auto hs = horadam_window(h, r, 3);
    const auto count = static_cast<std::size_t>(r.to - r.from);

    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    Json json = Json::array();
    for (std::size_t k = 0; k < count; ++k) {
        const std::string n = std::to_string(r.from + static_cast<std::int64_t>(k));
        const CartanNumber<BigInt> cw{hs[k], hs[k + 1], hs[k + 2], hs[k + 3]};
        if (o.kind == "scalar") {
            json.push_back(to_json(hs[k]));
            rows.push_back({n, hs[k].get_str()});
        } else if (o.kind == "cartan") {
            json.push_back(to_json(cw));
            rows.push_back({n, cw.s.get_str(), cw.ci.get_str(), cw.cj.get_str(), cw.ck.get_str()});
        } else {
            const auto s = epsilon(cw);
            json.push_back(to_json(s));
            rows.push_back({n, s.c1.re.to_string(), s.c1.im.to_string(), s.c2.re.to_string(), s.c2.im.to_string()});
        }
    }
    if (o.kind == "scalar") header = {"n", "value"};
    else if (o.kind == "cartan") header = {"n", "s", "i", "j", "k"};
    else header = {"n", "c1.re", "c1.im", "c2.re", "c2.im"};

    if (format == "json") return json.dump() + "\n";

    std::ostringstream os;
    const std::string sep = format == "csv" ? "," : " | ";
    const std::string lead = format == "csv" ? "" : "| ";
    const std::string tail = format == "csv" ? "" : " |";
    auto line = [&](const std::vector<std::string>& cells) {
        os << lead;
        for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? sep : "") << cells[c];
        os << tail << "\n";
    };
    if (format == "markdown") os << "# " << to_string(h) << ", " << o.kind << ", n in [" << r.from << ", " << r.to
                                 << ")\n\n";
    line(header);
    if (format == "markdown") line(std::vector<std::string>(header.size(), "---"));
    for (const auto& row : rows) line(row);
    return os.str();
}

std::string cmd_verify(const std::string& suite, const std::string& format) {
    const auto items = run_suite(suite);
    if (format == "json") return suite_summary(suite, items).dump(2) + "\n";
    if (format == "csv") return suite_csv(items);
    return suite_markdown(suite, items);
}

std::string cmd_report(const std::string& format) {
    const auto sections = build_report();
    if (format == "json") return report_json(sections).dump(2) + "\n";
    if (format == "csv") return report_csv(sections);
    return report_markdown(sections);
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw std::runtime_error("failed writing to standard output");
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + out + "' for writing");
    f << text;
    f.close();
    if (!f) throw std::runtime_error("failed writing '" + out + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cartan Horadam sequences: terms, verification suites, reconciliation report", "cartan"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out;
    const std::vector<std::string> formats{"json", "csv", "markdown"};
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--out", out, "Write to this file instead of standard output");
    };

    SeqOptions seq;
    std::vector<std::string> preset_names{"custom"};
    for (const auto& pr : kPresets) preset_names.emplace_back(pr.name);

    auto* seq_cmd = app.add_subcommand("seq", "List terms of a sequence");
    seq_cmd->add_option("--preset", seq.preset, "Preset name, or 'custom' with --p --q --a --b")
        ->check(CLI::IsMember(preset_names));
    seq_cmd->add_option("--p", seq.p, "Recurrence coefficient p");
    seq_cmd->add_option("--q", seq.q, "Recurrence coefficient q");
    seq_cmd->add_option("--a", seq.a, "H_0");
    seq_cmd->add_option("--b", seq.b, "H_1");
    seq_cmd->add_option("--kind", seq.kind, "scalar, cartan or spinor")
        ->check(CLI::IsMember({"scalar", "cartan", "spinor"}));
    seq_cmd->add_option("--range", seq.range, "Half-open index range A..B");
    add_common(seq_cmd);

    std::string suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    verify_cmd->add_option("--suite", suite, "binet, identities, genfunc, all or none")
        ->check(CLI::IsMember(suite_names()));
    add_common(verify_cmd);

    auto* report_cmd = app.add_subcommand("report", "Print the reconciliation report");
    add_common(report_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        for (auto& ch : msg) {
            if (ch == '\n') ch = ' ';
        }
        std::cerr << "cartan: error: " << msg << "\n";
        return 2;
    }

    try {
        std::string text;
        if (*seq_cmd) text = cmd_seq(seq, format);
        else if (*verify_cmd) text = cmd_verify(suite, format);
        else text = cmd_report(format);
        emit(text, out);
    } catch (const std::exception& e) {
        std::cerr << "cartan: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
