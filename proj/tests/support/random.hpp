#pragma once

// Seeded generators for the property tests. Fixed seeds keep every run identical.

#include <cstdint>
#include <random>

#include "cartan/cartan_number.hpp"
#include "cartan/exact_arith.hpp"

namespace cartan::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long lo = -100, long hi = 100) {
        long den = integer(1, 12);
        return Rational(integer(lo, hi), den);
    }

    QuadElem quad(std::int64_t d) { return {rational(), rational(), d}; }

    CartanNumber<Rational> cartan_q(long lo = -100, long hi = 100) {
        return {Rational(integer(lo, hi)), Rational(integer(lo, hi)), Rational(integer(lo, hi)),
                Rational(integer(lo, hi))};
    }

    CartanNumber<BigInt> cartan_z(long lo = -100, long hi = 100) {
        return {BigInt(integer(lo, hi)), BigInt(integer(lo, hi)), BigInt(integer(lo, hi)),
                BigInt(integer(lo, hi))};
    }

    ComplexRational complex_q() { return {rational(), rational()}; }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace cartan::testing
