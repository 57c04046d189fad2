#include <gtest/gtest.h>

#include <map>

#include "cartan/spinor.hpp"
#include "support/random.hpp"

namespace cartan {
namespace {

using testing::Gen;

constexpr int kTrials = 1000;

SpinorQ sp(Rational r1, Rational i1, Rational r2, Rational i2) {
    return spinor_q(std::move(r1), std::move(i1), std::move(r2), std::move(i2));
}

const Rational half(1, 2);

TEST(Epsilon, Examples) {
    EXPECT_EQ(epsilon(cartan_int(0, 1, 2, 5)), sp(0, Rational(9, 2), -half, 1));
    EXPECT_EQ(epsilon(cartan_int(1, 0, 0, 0)), sp(1, 0, 0, 0));
    EXPECT_EQ(epsilon(cartan_int(0, 1, 1, 3)), sp(0, Rational(5, 2), -half, 1));
}

TEST(Epsilon, Linear) {
    Gen g(11);
    for (int trial = 0; trial < kTrials; ++trial) {
        const auto x = g.cartan_q();
        const auto y = g.cartan_q();
        const Rational u = g.rational();
        const Rational v = g.rational();
        ASSERT_EQ(epsilon(u * x + v * y), u * epsilon(x) + v * epsilon(y));
    }
}

TEST(Epsilon, Injective) {
    Gen g(12);
    for (int trial = 0; trial < kTrials; ++trial) {
        auto x = g.cartan_q(-3, 3);
        if (is_zero(x)) continue;
        ASSERT_FALSE(is_zero(epsilon(x))) << x;
    }
    // Solving the four component equations: s = c1.re, ci = c2.im, cj = (c1.im + c2.re)/2, ck = c1.im - c2.re.
    for (int trial = 0; trial < kTrials; ++trial) {
        const auto x = g.cartan_q();
        const auto e = epsilon(x);
        ASSERT_EQ(x, cartan_q(e.c1.re, e.c2.im, (e.c1.im + e.c2.re) / 2, e.c1.im - e.c2.re));
    }
}

TEST(Conjugates, BasisExamples) {
    EXPECT_EQ(tilde_conj(sp(1, 0, 0, 0)), sp(0, 0, 0, -1));
    EXPECT_EQ(tilde_conj(sp(0, 0, 1, 0)), sp(0, 1, 0, 0));
    EXPECT_EQ(mate(sp(1, 0, 0, 0)), sp(0, 0, 1, 0));
    EXPECT_EQ(mate(epsilon(cartan_int(0, 1, 2, 5))), sp(half, 1, 0, Rational(-9, 2)));
}

TEST(Conjugates, SquareToMinusIdentity) {
    Gen g(13);
    for (int trial = 0; trial < kTrials; ++trial) {
        const SpinorQ phi{g.complex_q(), g.complex_q()};
        ASSERT_EQ(mate(mate(phi)), -phi);
        ASSERT_EQ(tilde_conj(tilde_conj(phi)), -phi);
    }
}

Mat2<ComplexRational> scaled_identity(const ComplexRational& s) {
    const ComplexRational zero{0, 0};
    return {s, zero, zero, s};
}

TEST(QHat, Examples) {
    const auto q = q_hat(cartan_int(0, 1, 2, 5));
    EXPECT_EQ(q.m11, (ComplexRational{0, Rational(9, 2)}));
    EXPECT_EQ(q.m12, (ComplexRational{half, 1}));
    EXPECT_EQ(q.m21, (ComplexRational{-half, 1}));
    EXPECT_EQ(q.m22, (ComplexRational{0, Rational(-9, 2)}));
    EXPECT_EQ(q * conj_transpose(q), scaled_identity(ComplexRational{Rational(43, 2), 0}));
    EXPECT_EQ(q_hat(cartan_int(1, 0, 0, 0)), Mat2<ComplexRational>::identity_like(q.m11));
}

TEST(QHat, Properties) {
    Gen g(14);
    for (int trial = 0; trial < kTrials; ++trial) {
        const auto x = g.cartan_q();
        const auto q = q_hat(x);
        const auto e = epsilon(x);
        ASSERT_EQ(q.m11, e.c1);
        ASSERT_EQ(q.m21, e.c2);
        const ComplexRational scale{e.c1.norm2() + e.c2.norm2(), 0};
        ASSERT_EQ(q * conj_transpose(q), scaled_identity(scale));
    }
}

ComplexRational sum_of_squares(const std::array<ComplexRational, 3>& a) {
    return a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
}

TEST(Isotropic, Examples) {
    const ComplexRational zero{0, 0};
    auto v = isotropic(sp(1, 0, 0, 0));
    EXPECT_EQ(v[0], (ComplexRational{1, 0}));
    EXPECT_EQ(v[1], (ComplexRational{0, 1}));
    EXPECT_EQ(v[2], zero);
    v = isotropic(sp(1, 0, 1, 0));
    EXPECT_EQ(v[0], zero);
    EXPECT_EQ(v[1], (ComplexRational{0, 2}));
    EXPECT_EQ(v[2], (ComplexRational{-2, 0}));
    EXPECT_EQ(sum_of_squares(isotropic(epsilon(cartan_int(0, 1, 2, 5)))), zero);
}

TEST(Isotropic, NullOnRandomSpinors) {
    Gen g(15);
    for (int trial = 0; trial < kTrials; ++trial) {
        const SpinorQ phi{g.complex_q(), g.complex_q()};
        ASSERT_TRUE(is_zero(sum_of_squares(isotropic(phi))));
    }
}

TEST(Vivarelli, Examples) {
    EXPECT_EQ(vivarelli(1, 0, 0, 0), sp(0, 1, 0, 0));
    EXPECT_EQ(vivarelli(0, 1, 0, 0), sp(0, 0, 1, 0));
    EXPECT_EQ(vivarelli(0, 0, 0, 0), sp(0, 0, 0, 0));
    EXPECT_EQ(vivarelli(0, 0, 1, 0), sp(0, 0, 0, 1));
    EXPECT_EQ(vivarelli(0, 0, 0, 1), sp(1, 0, 0, 0));
}

TEST(SpinorTerm, PrintedInitialConditions) {
    EXPECT_EQ(spinor_term(preset("pell"), 0), sp(0, Rational(9, 2), -half, 1));
    EXPECT_EQ(spinor_term(preset("pell"), 1), sp(1, 11, -1, 2));
    EXPECT_EQ(spinor_term(preset("pell_lucas"), 0), sp(2, Rational(17, 2), -half, 1));
    EXPECT_EQ(spinor_term(preset("pell_lucas"), 1), sp(1, 20, -2, 4));
    EXPECT_EQ(spinor_term(preset("jacobsthal"), 0), sp(0, Rational(5, 2), -half, 1));
    EXPECT_EQ(spinor_term(preset("jacobsthal"), 1), sp(1, Rational(11, 2), half, 1));
    EXPECT_EQ(spinor_term(preset("jacobsthal_lucas"), 0), sp(2, Rational(17, 2), Rational(3, 2), 1));
    EXPECT_EQ(spinor_term(preset("jacobsthal_lucas"), 1), sp(1, Rational(31, 2), Rational(-3, 2), 5));
}

TEST(SpinorTerm, FollowsTheHoradamRecurrence) {
    for (const auto& pr : kPresets) {
        const auto s = spinor_terms(pr.params, 40);
        const Rational p = pr.params.p;
        const Rational q = pr.params.q;
        for (std::size_t n = 1; n + 1 < s.size(); ++n) ASSERT_EQ(s[n + 1], p * s[n] + q * s[n - 1]) << pr.name;
        for (std::int64_t n : {0, 5, 39}) ASSERT_EQ(spinor_term(pr.params, n), s[n]);
    }
}

TEST(SpinorBinet, EqualsSpinorTerm) {
    for (const auto name : kTablePresets) {
        const auto ctx = make_context(preset(name));
        const auto s = spinor_terms(ctx.params, 65);
        for (std::int64_t n = 0; n <= 64; ++n) {
            ASSERT_EQ(spinor_binet(ctx, n), to_quad(s[n], ctx.d)) << name << " n=" << n;
        }
    }
    EXPECT_EQ(spinor_binet(preset("pell"), 3), to_quad(epsilon(cartan_int(5, 12, 29, 70)), 8));
    EXPECT_THROW(spinor_binet(HoradamParams{2, -1, 0, 1}, 0), degenerate_discriminant);
}

std::map<std::string, ReconEntry> forms_by_name() {
    std::map<std::string, ReconEntry> out;
    for (auto& e : reconcile_spinor_forms()) out.emplace(e.name, e);
    return out;
}

TEST(SpinorForms, Verdicts) {
    const auto forms = forms_by_name();
    for (const auto name : kTablePresets) {
        const std::string n(name);
        const auto& conj = forms.at("spinor_conjugate." + n);
        EXPECT_EQ(conj.verdict, Verdict::mismatch);
        EXPECT_EQ(conj.coords, (std::vector<std::string>{"c1.re", "c2.re"}));
        EXPECT_EQ(forms.at("spinor_mate." + n).verdict, Verdict::match);
        EXPECT_EQ(forms.at("spinor_of_conjugate." + n).verdict, Verdict::match);
        EXPECT_EQ(forms.at("spinor_complex_conjugate." + n).verdict, Verdict::match);
        const bool fibonacci_form = (n == "fibonacci" || n == "lucas");
        EXPECT_EQ(forms.at("spinor_recurrence." + n).verdict, fibonacci_form ? Verdict::match : Verdict::mismatch);
    }
    EXPECT_EQ(forms.at("spinor_binet.pell.X").coords, (std::vector<std::string>{"c1.re", "c1.im"}));
    EXPECT_EQ(forms.at("spinor_binet.pell_lucas.Y").coords, (std::vector<std::string>{"c1.re", "c1.im", "c2.re"}));
    for (const auto label : {"SCP_n", "SCp_n", "SCJ_n", "SCj_n"}) {
        EXPECT_EQ(forms.at(std::string("spinor_binet_display.") + label).verdict, Verdict::not_comparable);
    }
    EXPECT_TRUE(forms.at("spinor_binet_display.SCJ_n").extra["X_part_differs_on"].empty());
    EXPECT_EQ(forms.at("spinor_binet_display.SCP_n").extra["X_part_differs_on"], Json::array({"c2.im"}));
}

// At n = 0 the general x0 formula's real part is b - pa + a sqrt d; the
// computed one is 2b - pa + a sqrt d. They agree only when b = 0.
TEST(SpinorForms, GeneralBinetAgreesWhenBIsZero) {
    const HoradamParams h{3, 1, 5, 0};
    const auto entries = reconcile_spinor_binet(h, "custom");
    for (const auto& e : entries) {
        for (const auto& c : e.coords) EXPECT_NE(c, "c1.re") << e.name;
    }
}

}  // namespace
}  // namespace cartan
