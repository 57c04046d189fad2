#pragma once

// JSON renderings. Rationals are always exact "num/den" strings, never numbers.

#include <nlohmann/json.hpp>

#include "cartan/cartan_number.hpp"
#include "cartan/exact_arith.hpp"
#include "cartan/mat2.hpp"

namespace cartan {

/// Insertion-ordered so every rendering is byte-stable.
using Json = nlohmann::ordered_json;

inline Json to_json(const BigInt& x) { return x.get_str(); }
inline Json to_json(const Rational& x) { return x.to_string(); }

inline Json to_json(const QuadElem& x) {
    Json j = Json::object();
    j["a"] = x.a().to_string();
    j["b"] = x.b().to_string();
    j["d"] = x.d();
    return j;
}

template <class R>
Json to_json(const Complex<R>& z) {
    Json j = Json::object();
    j["re"] = to_json(z.re);
    j["im"] = to_json(z.im);
    return j;
}

template <class R>
Json to_json(const CartanNumber<R>& x) {
    Json j = Json::object();
    j["s"] = to_json(x.s);
    j["i"] = to_json(x.ci);
    j["j"] = to_json(x.cj);
    j["k"] = to_json(x.ck);
    return j;
}

template <class R>
Json to_json(const Mat2<R>& m) {
    return Json::array({Json::array({to_json(m.m11), to_json(m.m12)}),
                        Json::array({to_json(m.m21), to_json(m.m22)})});
}

inline Rational rational_from_json(const Json& j) { return Rational::parse(j.get<std::string>()); }

inline QuadElem quad_from_json(const Json& j) {
    return {rational_from_json(j.at("a")), rational_from_json(j.at("b")), j.at("d").get<std::int64_t>()};
}

inline CartanNumber<Rational> cartan_from_json(const Json& j) {
    return {rational_from_json(j.at("s")), rational_from_json(j.at("i")), rational_from_json(j.at("j")),
            rational_from_json(j.at("k"))};
}

}  // namespace cartan
