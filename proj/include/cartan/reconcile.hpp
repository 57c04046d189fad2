#pragma once

/**
 * @file reconcile.hpp
 * @brief Comparison of printed constants against computed values.
 *
 * A ReconEntry records one printed value, the value the library computes
 * for the same quantity, and the verdict. Coordinates that disagree are
 * listed by name ("s", "i", "j", "k" for Cartan numbers, "c1.re" ... for
 * spinors).
 *
 * Equality in Q[t]/(t^2 - d) is structural when d is not a perfect square
 * (the ring is then a field isomorphic to Q(sqrt d)). When d = m^2 the ring
 * splits and printed values are written with sqrt(d) = m, so both sides are
 * compared after evaluating t at +m.
 */

#include <string>
#include <utility>
#include <vector>

#include "cartan/cartan_number.hpp"
#include "cartan/exact_arith.hpp"
#include "cartan/json_io.hpp"

namespace cartan {

enum class Verdict { match, mismatch, not_comparable };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::match: return "match";
        case Verdict::mismatch: return "mismatch";
        case Verdict::not_comparable: return "not_comparable";
    }
    return "?";
}

struct ReconEntry {
    std::string name;
    Json printed;
    Json computed;
    Verdict verdict = Verdict::not_comparable;
    std::vector<std::string> coords;  // mismatching coordinates
    std::string note;
    Json extra = Json::object();      // entry-specific fields, appended verbatim
};

inline Json to_json(const ReconEntry& e) {
    Json j = Json::object();
    j["name"] = e.name;
    j["paper"] = e.printed;
    j["computed"] = e.computed;
    j["verdict"] = to_string(e.verdict);
    j["coords"] = e.coords;
    if (!e.note.empty()) j["note"] = e.note;
    for (const auto& [key, value] : e.extra.items()) j[key] = value;
    return j;
}

/// x evaluated at t = +sqrt(d) when d is a perfect square.
inline Rational evaluate_at_root(const QuadElem& x) {
    const auto m = exact_sqrt(x.d());
    if (!m) throw invalid_argument("d=" + std::to_string(x.d()) + " is not a perfect square");
    return x.a() + x.b() * Rational(static_cast<long long>(*m));
}

inline bool same_value(const BigInt& x, const BigInt& y) { return x == y; }
inline bool same_value(const Rational& x, const Rational& y) { return x == y; }
inline bool same_value(const QuadElem& x, const QuadElem& y) {
    if (x.d() != y.d()) return false;
    if (exact_sqrt(x.d())) return evaluate_at_root(x) == evaluate_at_root(y);
    return x == y;
}
template <class R>
bool same_value(const Complex<R>& x, const Complex<R>& y) {
    return same_value(x.re, y.re) && same_value(x.im, y.im);
}

template <class R>
std::vector<std::string> differing_coords(const R& x, const R& y, const std::string& label) {
    if (same_value(x, y)) return {};
    return {label};
}

template <class R>
std::vector<std::string> differing_coords(const Complex<R>& x, const Complex<R>& y, const std::string& label) {
    std::vector<std::string> out;
    const std::string prefix = label.empty() ? "" : label + ".";
    if (!same_value(x.re, y.re)) out.push_back(prefix + "re");
    if (!same_value(x.im, y.im)) out.push_back(prefix + "im");
    return out;
}

template <class R>
std::vector<std::string> differing_coords(const CartanNumber<R>& x, const CartanNumber<R>& y,
                                          const std::string& label) {
    std::vector<std::string> out;
    const std::string prefix = label.empty() ? "" : label + ".";
    for (std::size_t c = 0; c < 4; ++c) {
        if (!same_value(x[c], y[c])) out.push_back(prefix + kCartanCoordNames[c]);
    }
    return out;
}

template <class T>
bool same_value(const CartanNumber<T>& x, const CartanNumber<T>& y) {
    return differing_coords(x, y, "").empty();
}

/// Builds a match/mismatch entry from typed printed and computed values.
template <class T>
ReconEntry compare_entry(std::string name, const T& printed, const T& computed, std::string note = {}) {
    ReconEntry e;
    e.name = std::move(name);
    e.printed = to_json(printed);
    e.computed = to_json(computed);
    e.coords = differing_coords(printed, computed, "");
    e.verdict = e.coords.empty() ? Verdict::match : Verdict::mismatch;
    e.note = std::move(note);
    return e;
}

}  // namespace cartan
