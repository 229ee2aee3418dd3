#include <complex>
#include <random>

#include <gtest/gtest.h>

#include <pbent/golden.hpp>
#include <pbent/transforms.hpp>

using namespace pbent;

namespace {

const json& gf32() {
    static json j = load_fixture(PBENT_GOLDEN_DIR, "gf3_2.json");
    return j;
}

PAryFunction named(const std::string& name) {
    return PAryFunction(3, 2, gf32().at("functions").at(name).get<std::vector<std::uint8_t>>());
}

// floating point oracle for W_f(u)
std::complex<double> walsh_float(const PAryFunction& f, std::size_t u) {
    const double pi = 3.14159265358979323846;
    std::complex<double> s = 0;
    const Vec uu = index_vector(u, f.p, f.n);
    for (std::size_t x = 0; x < f.size(); ++x) {
        const Vec xx = index_vector(x, f.p, f.n);
        int d = 0;
        for (int k = 0; k < f.n; ++k) d += uu[k] * xx[k];
        s += std::polar(1.0, 2 * pi * (f[x] - d) / f.p);
    }
    return s;
}

PAryFunction random_function(int p, int n, std::mt19937_64& rng) {
    std::vector<std::uint8_t> v(ipow(p, n));
    for (auto& x : v) x = static_cast<std::uint8_t>(rng() % p);
    return PAryFunction(p, n, std::move(v));
}

}  // namespace

TEST(Walsh, MatchesFloatingPointSum) {
    std::mt19937_64 rng(5);
    for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 2}, {3, 3}, {5, 2}})
        for (int t = 0; t < 10; ++t) {
            auto f = random_function(p, n, rng);
            auto W = walsh_transform(f);
            for (std::size_t u = 0; u < f.size(); ++u) EXPECT_LT(std::abs(to_complex(W[u]) - walsh_float(f, u)), 1e-6);
        }
}

TEST(Walsh, ZeroFunction) {
    auto W = walsh_transform(PAryFunction::zero(3, 2));
    EXPECT_EQ(W[0], CycInt(3, 9));
    for (std::size_t u = 1; u < 9; ++u) EXPECT_TRUE(W[u].is_zero());
    EXPECT_FALSE(is_bent(PAryFunction::zero(3, 2)));
}

TEST(Walsh, WalshAtZeroExamples) {
    auto fx = load_fixture(PBENT_GOLDEN_DIR, "gf3_3.json").at("walsh_zero");
    for (const auto& e : fx) {
        auto W = walsh_transform(from_anf(e.at("anf"), 3, 3));
        EXPECT_EQ(W[0], CycInt::from_coeffs(3, e.at("w0").get<std::vector<std::int64_t>>())) << e.at("anf");
    }
}

TEST(Bent, AllEighteenListedFunctions) {
    for (auto& [name, v] : gf32().at("functions").items()) EXPECT_TRUE(is_bent(named(name))) << name;
}

TEST(Regularity, ListedOrbits) {
    for (const auto& name : gf32().at("regular_orbit_listed")) {
        auto prof = classify_regularity(named(name));
        EXPECT_TRUE(prof.is_regular) << name;
    }
    for (const auto& name : gf32().at("weakly_regular_orbit_listed")) {
        auto prof = classify_regularity(named(name));
        EXPECT_TRUE(prof.is_weakly_regular) << name;
        EXPECT_FALSE(prof.is_regular) << name;
        EXPECT_EQ(prof.mu_description, "-1") << name;
    }
    // b9 is absent from the listed regular orbit but belongs to it
    EXPECT_TRUE(classify_regularity(named("b9")).is_regular);
}

TEST(Regularity, WalshRatiosOfWorkedExamples) {
    auto w = load_fixture(PBENT_GOLDEN_DIR, "worked_examples.json");
    auto e1 = w.at("b1_walsh_dual_minus").get<std::vector<int>>();
    auto e2 = w.at("b2_walsh_ratio_exponents").get<std::vector<int>>();
    auto W1 = walsh_transform(named("b1")), W2 = walsh_transform(named("b2"));
    for (std::size_t u = 0; u < 9; ++u) {
        EXPECT_EQ(W1[u], -3 * CycInt::zeta(3, e1[u]));
        EXPECT_EQ(W2[u], 3 * CycInt::zeta(3, e2[u]));
    }
}

TEST(Dual, RegularPairs) {
    for (const auto& pr : gf32().at("regular_duals")) {
        EXPECT_EQ(dual_function(named(pr[0])), named(pr[1]));
        EXPECT_EQ(dual_function(named(pr[1])), named(pr[0]));
    }
}

TEST(Dual, MinusOnePairs) {
    // normalised with f*(0) = 0 and mu = W_f(0) / 3 = -1
    for (const auto& pr : gf32().at("minus_one_duals")) {
        auto prof = classify_regularity(named(pr[0]));
        ASSERT_TRUE(prof.is_weakly_regular);
        EXPECT_EQ(*prof.dual, named(pr[1])) << pr[0];
        EXPECT_EQ(*prof.mu_scaled, CycInt(3, -3));
    }
}

TEST(Dual, RoundTripIsReflection) {
    for (auto& [name, v] : gf32().at("functions").items()) EXPECT_EQ(dual_roundtrip_offset(named(name)), 0) << name;
}

TEST(Regularity, OddDimensionQuarterTurn) {
    auto f = evaluate_anf(parse_anf("-x0^2 - x1^2 - x2^2", 3, 3), 3, 3);
    auto prof = classify_regularity(f);
    EXPECT_TRUE(prof.is_bent);
    EXPECT_TRUE(prof.is_weakly_regular);
    EXPECT_FALSE(prof.is_regular);
    ASSERT_TRUE(prof.mu.has_value());
    EXPECT_TRUE(prof.mu->quarter_turn);
    // W(0) / 3^{3/2} = -i or i: its square is -1
    auto mu = to_complex(*prof.mu_scaled) / std::pow(3.0, 1.5);
    EXPECT_LT(std::abs(mu * mu + 1.0), 1e-9);
}

TEST(Regularity, NotWeaklyRegularInOddDimension) {
    auto f = evaluate_anf(parse_anf("x0*x2 + 2*x1^2 + 2*x0^2*x1^2", 3, 3), 3, 3);
    auto prof = classify_regularity(f);
    EXPECT_TRUE(prof.is_bent);
    EXPECT_FALSE(prof.is_weakly_regular);
    EXPECT_THROW(dual_function(f), unsupported);
}

TEST(Regularity, KswFormCoversEveryBentValue) {
    for (auto& [name, v] : gf32().at("functions").items()) {
        auto f = named(name);
        auto prof = classify_regularity(f);
        auto W = walsh_transform(f);
        for (std::size_t u = 0; u < f.size(); ++u) {
            const auto& k = prof.ksw[u];
            EXPECT_EQ(W[u], static_cast<std::int64_t>(k.sign) * CycInt::zeta(3, k.exponent) * half_power(3, 2));
        }
    }
}

TEST(Butson, BentFunctionsGiveButsonMatrices) {
    EXPECT_TRUE(is_butson(named("b1")));
    EXPECT_FALSE(is_butson(PAryFunction::zero(3, 2)));
}

TEST(Derivative, BalancedForBent) {
    auto f = named("b5");
    for (std::size_t b = 1; b < 9; ++b) EXPECT_TRUE(derivative_is_balanced(f, b));
    EXPECT_FALSE(derivative_is_balanced(PAryFunction::zero(3, 2), 1));
}

TEST(Galois, CovarianceOnRandomFunctions) {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 20; ++t) {
        auto f = random_function(5, 2, rng);
        for (int k = 1; k < 5; ++k) EXPECT_TRUE(galois_covariance_holds(f, k));
    }
    EXPECT_THROW(galois_covariance_holds(named("b1"), 3), invalid_input);
}

TEST(RationalW0, SignatureIdentity) {
    auto c = rational_w0_signature_check(named("b2"));
    EXPECT_TRUE(c.bent);
    EXPECT_TRUE(c.equal_nonzero_levels);
    EXPECT_TRUE(c.value_identity);
    EXPECT_EQ(c.w0, 3);
    EXPECT_THROW(rational_w0_signature_check(parse_values(3, 2, "0,1,0,0,0,0,0,0,0")), not_applicable);
}

TEST(Fourier, ZeroAndDelta) {
    auto F = fourier_transform(parse_values(3, 2, "1,0,0,0,0,0,0,0,0"));
    for (const auto& y : F) EXPECT_EQ(y, CycInt(3, 1));
}
