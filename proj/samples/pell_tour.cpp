// Walks the Pell family through the library: terms, Binet form, spinors,
// generating function, and one identity decided exactly.

#include <iostream>

#include "cartan/cartan_sequences.hpp"
#include "cartan/cfinite.hpp"
#include "cartan/genfunc.hpp"
#include "cartan/horadam.hpp"
#include "cartan/spinor.hpp"

int main() {
    using namespace cartan;
    const HoradamParams pell = preset("pell");

    std::cout << "Pell terms:";
    for (const auto& v : terms_iter(pell, 10)) std::cout << ' ' << v;
    std::cout << "\nP_1000 has " << term_fast(pell, 1000).get_str().size() << " digits\n\n";

    const auto ctx = make_context(pell);
    for (std::int64_t n = 0; n < 4; ++n) {
        const auto cw = cw_term(pell, n);
        std::cout << "CP_" << n << " = " << cw << "  binet agrees: " << std::boolalpha
                  << equals_integer_cartan(binet_term(ctx, n), cw) << "  spinor = " << spinor_term(pell, n) << '\n';
    }

    const auto x = cw_term(pell, 2);
    std::cout << "\ncharacter(CP_2) = " << character(x) << ", det theta(CP_2) = " << theta(to_rational(x)).det()
              << '\n';

    const auto gf = cartan_gf(pell);
    std::cout << "\nseries of the Cartan-Pell generating function:\n";
    const auto series = series_expand(gf, 5);
    for (std::size_t n = 0; n < series.size(); ++n) std::cout << "  x^" << n << ": " << series[n] << '\n';

    std::cout << "\nidentities under pell/pell_lucas:\n";
    for (const auto& r : builtin_identity_suite()) {
        if (r.roles.label() != "pell/pell_lucas") continue;
        std::cout << "  " << r.def.name << ": " << (r.all_verified() ? "holds" : "fails");
        for (std::size_t c = 0; c < 4; ++c) {
            if (r.coords[c].witness) {
                std::cout << " (" << kCartanCoordNames[c] << " at n=" << r.coords[c].witness->n << ")";
                break;
            }
        }
        std::cout << '\n';
    }
}
