#include <random>

#include <gtest/gtest.h>

#include <pbent/golden.hpp>
#include <pbent/orbits.hpp>

using namespace pbent;

namespace {

GlElement mul(const GlElement& a, const GlElement& b) {
    GlElement c{a.p, a.n, std::vector<int>(a.n * a.n, 0)};
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            long long s = 0;
            for (int k = 0; k < a.n; ++k) s += a(i, k) * b(k, j);
            c.m[i * a.n + j] = mod(s, a.p);
        }
    return c;
}

std::vector<PAryFunction> gf32_bent() {
    auto fx = load_fixture(PBENT_GOLDEN_DIR, "gf3_2.json");
    std::vector<PAryFunction> out;
    for (auto& [name, v] : fx.at("functions").items()) out.emplace_back(3, 2, v.get<std::vector<std::uint8_t>>());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Gl, OrderMatchesEnumeration) {
    for (auto [n, p] : std::vector<std::pair<int, int>>{{1, 3}, {2, 2}, {2, 3}, {2, 5}, {3, 2}, {3, 3}}) {
        EXPECT_EQ(enumerate_gl(n, p).size(), gl_order(n, p));
    }
    EXPECT_EQ(gl_order(3, 3), load_fixture(PBENT_GOLDEN_DIR, "gf3_3.json").at("gl_order").get<std::uint64_t>());
    EXPECT_EQ(gl_order(2, 5), load_fixture(PBENT_GOLDEN_DIR, "gf5_2.json").at("gl_order").get<std::uint64_t>());
    EXPECT_THROW(enumerate_gl(4, 5), unsupported);
}

TEST(Gl, InverseAndTranspose) {
    for (const auto& g : enumerate_gl(2, 5)) {
        auto I = mul(g, inverse(g));
        EXPECT_EQ(I.m, (std::vector<int>{1, 0, 0, 1}));
        EXPECT_EQ(transpose(transpose(g)), g);
        EXPECT_EQ(det_mod_p(transpose(g)), det_mod_p(g));
    }
    EXPECT_THROW(inverse(GlElement{3, 2, {1, 1, 1, 1}}), invalid_input);
    EXPECT_EQ(det_mod_p(GlElement{3, 2, {1, 2, 2, 1}}), mod(1 - 4, 3));
}

TEST(Action, Composition) {
    std::mt19937_64 rng(9);
    auto G = enumerate_gl(2, 3);
    std::vector<std::uint8_t> v(9);
    for (auto& x : v) x = static_cast<std::uint8_t>(rng() % 3);
    PAryFunction f(3, 2, v);
    for (int t = 0; t < 50; ++t) {
        const auto& g = G[rng() % G.size()];
        const auto& h = G[rng() % G.size()];
        // (g.(h.f))(x) = f(h g x)
        EXPECT_EQ(act(g, act(h, f)), act(mul(h, g), f));
    }
    EXPECT_THROW(act(GlElement{3, 2, {1, 1, 1, 1}}, f), invalid_input);
    EXPECT_THROW(act(G[0], PAryFunction::zero(5, 2)), invalid_input);
}

TEST(Action, WalshCovariance) {
    // W_{f o g}(u) = W_f((g^{-1})^T u)
    std::mt19937_64 rng(10);
    auto G = enumerate_gl(2, 5);
    std::vector<std::uint8_t> v(25);
    for (auto& x : v) x = static_cast<std::uint8_t>(rng() % 5);
    PAryFunction f(5, 2, v);
    auto W = walsh_transform(f);
    for (int t = 0; t < 30; ++t) {
        const auto& g = G[rng() % G.size()];
        auto Wg = walsh_transform(act(g, f));
        auto h = transpose(inverse(g));
        for (std::size_t u = 0; u < 25; ++u) {
            auto hu = vector_index(pbent::apply(h, index_vector(u, 5, 2)), 5);
            EXPECT_EQ(Wg[u], W[hu]);
        }
    }
}

TEST(Orbits, Gf32Partition) {
    auto S = gf32_bent();
    auto part = orbit_partition(S, 3, 2);
    EXPECT_TRUE(part.closed);
    ASSERT_EQ(part.orbits.size(), 2u);
    std::multiset<std::size_t> sizes;
    for (const auto& o : part.orbits) sizes.insert(o.size());
    EXPECT_EQ(sizes, (std::multiset<std::size_t>{6, 12}));
    // each orbit is exactly the set of images of its representative
    for (const auto& o : part.orbits) {
        std::set<PAryFunction> images;
        for (const auto& g : enumerate_gl(2, 3)) images.insert(act(g, o.representative));
        std::set<PAryFunction> members;
        for (auto m : o.members) members.insert(S[m]);
        EXPECT_EQ(images, members);
        EXPECT_EQ(canonical_form(S[o.members.back()]), o.representative);
    }
}

TEST(Orbits, ClosureWitness) {
    auto S = gf32_bent();
    S.pop_back();
    auto part = orbit_partition(S, 3, 2);
    EXPECT_FALSE(part.closed);
    ASSERT_TRUE(part.closure_witness.has_value());
    EXPECT_EQ(std::count(S.begin(), S.end(), part.closure_witness->second), 0);
}

TEST(Orbits, ScalarRelations) {
    auto part = orbit_partition(gf32_bent(), 3, 2);
    auto rel = scalar_relations(part);
    for (std::size_t o = 0; o < part.orbits.size(); ++o) {
        ASSERT_EQ(rel[o].size(), 2u);
        EXPECT_EQ(rel[o][0], o);
        ASSERT_TRUE(rel[o][1].has_value());
    }
}

TEST(Orbits, NegationsStayInTheSet) {
    auto fx = load_fixture(PBENT_GOLDEN_DIR, "gf3_2.json");
    auto get = [&](const std::string& n) {
        return PAryFunction(3, 2, fx.at("functions").at(n).get<std::vector<std::uint8_t>>());
    };
    for (const auto& pr : fx.at("negations")) EXPECT_EQ(scaled(get(pr[0]), 2), get(pr[1]));
    for (const auto& s : fx.at("sums")) {
        auto a = get(s[1]), b = get(s[2]);
        std::vector<std::uint8_t> v(9);
        for (std::size_t i = 0; i < 9; ++i) v[i] = static_cast<std::uint8_t>((a[i] + b[i]) % 3);
        EXPECT_EQ(PAryFunction(3, 2, v), get(s[0]));
    }
    for (const auto& s : fx.at("supports"))
        for (const auto& n : s.at("functions")) EXPECT_EQ(support(get(n)), s.at("set").get<std::vector<std::size_t>>());
}
