#pragma once

/**
 * @file cartan_sequences.hpp
 * @brief Cartan Horadam numbers CW_n = H_n + H_{n+1} i + H_{n+2} j + H_{n+3} k
 * and their Binet form CW_n = X alpha^n + Y beta^n.
 *
 * The Binet coefficients come from the general formulas
 *
 *     X = (2 CW_1 - p CW_0 + t CW_0) / (2t),
 *     Y = (CW_0 (t + p) - 2 CW_1) / (2t),
 *
 * evaluated in Q[t]/(t^2 - d). Since t is always invertible for d != 0
 * (t^-1 = t/d), this works even when d is a perfect square.
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cartan/cartan_number.hpp"
#include "cartan/exact_arith.hpp"
#include "cartan/horadam.hpp"
#include "cartan/reconcile.hpp"

namespace cartan {

/// (H_n, H_{n+1}, H_{n+2}, H_{n+3}); two logarithmic-time terms plus two recurrence steps.
inline CartanNumber<BigInt> cw_term(const HoradamParams& h, std::int64_t n) {
    check_index(n);
    const BigInt p = to_bigint(h.p);
    const BigInt q = to_bigint(h.q);
    BigInt h0 = term_fast(h, n);
    BigInt h1 = term_fast(h, n + 1);
    BigInt h2 = p * h1 + q * h0;
    BigInt h3 = p * h2 + q * h1;
    return {std::move(h0), std::move(h1), std::move(h2), std::move(h3)};
}

/// CW_0 .. CW_{count-1} from one linear pass.
inline std::vector<CartanNumber<BigInt>> cw_terms(const HoradamParams& h, std::size_t count) {
    const auto hs = terms_iter(h, count + 3);
    std::vector<CartanNumber<BigInt>> out;
    out.reserve(count);
    for (std::size_t n = 0; n < count; ++n) out.push_back({hs[n], hs[n + 1], hs[n + 2], hs[n + 3]});
    return out;
}

struct BinetCoefficients {
    CartanNumber<QuadElem> X;
    CartanNumber<QuadElem> Y;
};

inline BinetCoefficients binet_coeffs(const HoradamParams& h) {
    const CharacteristicRoots r = roots(h);  // throws on d = 0
    const std::int64_t d = r.d;
    const auto cw0 = to_quad(cw_term(h, 0), d);
    const auto cw1 = to_quad(cw_term(h, 1), d);
    const QuadElem t = QuadElem::root(d);
    const QuadElem p = QuadElem::scalar(h.p, d);
    const QuadElem inv_2t = (QuadElem::scalar(2, d) * t).inverse();

    auto X = inv_2t * (2 * cw1 - p * cw0 + t * cw0);
    auto Y = inv_2t * ((t + p) * cw0 - 2 * cw1);
    return {std::move(X), std::move(Y)};
}

struct CartanSeqContext {
    HoradamParams params;
    std::int64_t d;
    QuadElem alpha;
    QuadElem beta;
    CartanNumber<QuadElem> X;
    CartanNumber<QuadElem> Y;
};

inline CartanSeqContext make_context(const HoradamParams& h) {
    const CharacteristicRoots r = roots(h);
    auto [X, Y] = binet_coeffs(h);
    return {h, r.d, r.alpha, r.beta, std::move(X), std::move(Y)};
}

/// X alpha^n + Y beta^n, left in Q[t]/(t^2 - d).
inline CartanNumber<QuadElem> binet_term(const CartanSeqContext& ctx, std::int64_t n) {
    check_index(n);
    const auto e = static_cast<unsigned long>(n);
    return pow(ctx.alpha, e) * ctx.X + pow(ctx.beta, e) * ctx.Y;
}

/// True when every coordinate of x has zero t-part and its rational part equals y.
inline bool equals_integer_cartan(const CartanNumber<QuadElem>& x, const CartanNumber<BigInt>& y) {
    for (std::size_t c = 0; c < 4; ++c) {
        if (!x[c].is_rational() || x[c].a() != Rational(y[c])) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Printed Binet constants
// ---------------------------------------------------------------------------

namespace detail {

/// r + c sqrt(2) inside Q[t]/(t^2 - 8).
inline QuadElem surd2(long r, long c) { return embed_surd(r, c, 2, 8); }

inline CartanNumber<QuadElem> surd2_cartan(std::array<std::pair<long, long>, 4> coords) {
    return {surd2(coords[0].first, coords[0].second), surd2(coords[1].first, coords[1].second),
            surd2(coords[2].first, coords[2].second), surd2(coords[3].first, coords[3].second)};
}

inline CartanNumber<QuadElem> rational_cartan(long s, long i, long j, long k, std::int64_t d) {
    return to_quad(cartan_int(s, i, j, k), d);
}

struct PrintedBinetPair {
    std::string preset;
    std::string first_name;
    std::string second_name;
    CartanNumber<QuadElem> first;
    CartanNumber<QuadElem> second;
    std::string note;
};

inline std::vector<PrintedBinetPair> printed_binet_pairs() {
    // 1/(2 sqrt 2) = sqrt(2)/4
    const QuadElem inv_2sqrt2 = embed_surd(0, Rational(1, 4), 2, 8);
    const auto pell_A = inv_2sqrt2 * surd2_cartan({{{1, 0}, {1, 1}, {4, 2}, {7, 5}}});
    const auto pell_B = inv_2sqrt2 * surd2_cartan({{{-1, 0}, {-1, 1}, {-4, 2}, {-7, 5}}});
    const auto pl_A = surd2_cartan({{{1, 0}, {1, 1}, {3, 2}, {7, 5}}});
    const auto pl_B = surd2_cartan({{{1, 0}, {1, -1}, {3, -2}, {7, -5}}});

    return {
        {"pell", "A", "B", pell_A, pell_B,
         "A printed as '(4+2sqrt2)+j'; read as j-coordinate 4+2sqrt2"},
        {"jacobsthal", "C", "D", rational_cartan(1, 0, 2, 2, 9), rational_cartan(-1, 1, -1, 1, 9),
         "d=9; compared with t evaluated at 3"},
        {"pell_lucas", "A*", "B*", pl_A, pl_B, ""},
        {"pell_lucas_std", "A*", "B*", pl_A, pl_B, "same printed constants checked against a=2, b=2"},
        {"jacobsthal_lucas", "C*", "D*", rational_cartan(-1, 4, 2, 10, 9), rational_cartan(3, -3, 3, -3, 9),
         "d=9; compared with t evaluated at 3"},
    };
}

}  // namespace detail

/**
 * One entry per printed Binet constant. Each entry also carries the probe
 * "first + second == CW_0" for both the printed and the computed pair, which
 * any correct pair must satisfy.
 */
inline std::vector<ReconEntry> reconcile_binet_constants() {
    std::vector<ReconEntry> out;
    for (const auto& pair : detail::printed_binet_pairs()) {
        const HoradamParams h = preset(pair.preset);
        const auto [X, Y] = binet_coeffs(h);
        const auto cw0 = to_quad(cw_term(h, 0), h.discriminant());

        Json probe = Json::object();
        probe["printed_sum_equals_cw0"] = same_value(pair.first + pair.second, cw0);
        probe["computed_sum_equals_cw0"] = same_value(X + Y, cw0);

        auto a = compare_entry(pair.preset + "." + pair.first_name, pair.first, X, pair.note);
        a.extra["probe"] = probe;
        out.push_back(std::move(a));
        auto b = compare_entry(pair.preset + "." + pair.second_name, pair.second, Y, pair.note);
        b.extra["probe"] = probe;
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace cartan
