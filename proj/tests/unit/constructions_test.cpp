#include <gtest/gtest.h>

#include <chrono>

#include "csd/constructions.hpp"

namespace csd {
namespace {

ConstructionSpec spec_for(ConstructionKind kind, std::size_t d)
{
    ConstructionSpec s;
    s.kind = kind;
    s.dim = d;
    return s;
}

void expect_generator_invariants(const VerifiedConfiguration& v, bool general_position = true)
{
    const auto d = v.config.dim();
    EXPECT_TRUE(v.verified);
    EXPECT_EQ(colourful_depth(v.config, Point::origin(d), Containment::open).count, v.claimed_depth_at_origin);
    EXPECT_TRUE(core_membership(v.config, Point::origin(d), true));
    if (general_position) {
        auto all = v.config.all_points();
        all.push_back(Point::origin(d));
        EXPECT_TRUE(in_general_position(all));
    }
}

TEST(Identical, DepthIsFactorial)
{
    const std::uint64_t expected[] = {2, 6, 24};
    for (std::size_t d = 1; d <= 3; ++d) {
        auto v = gen_identical(d);
        EXPECT_EQ(v.claimed_depth_at_origin, expected[d - 1]);
        EXPECT_EQ(colourful_depth(v.config, Point::origin(d), Containment::closed).count, expected[d - 1]);
        expect_generator_invariants(v, false);
        auto distinct = v.config.colour(0);
        distinct.push_back(Point::origin(d));
        EXPECT_TRUE(in_general_position(distinct));
    }
}

TEST(SMinus, DepthIsDSquaredPlusOne)
{
    for (std::size_t d = 1; d <= 3; ++d) {
        auto v = gen_sminus(spec_for(ConstructionKind::s_minus, d));
        EXPECT_EQ(v.claimed_depth_at_origin, d * d + 1);
        expect_generator_invariants(v);
    }
}

TEST(SMinus, PlanarUsesExplicitCoordinates)
{
    auto cfg = gen_sminus(spec_for(ConstructionKind::s_minus, 2)).config;
    const Rational eps(1, 200);
    EXPECT_EQ(cfg.point(0, 0)[1], -2 * eps);
    EXPECT_EQ(cfg.point(0, 2)[0], -eps);
    EXPECT_EQ(cfg.point(1, 2)[0], eps);
    EXPECT_EQ(cfg.point(2, 0)[1], -4 * eps);
    EXPECT_EQ(cfg.point(2, 1)[1], 3 * eps);
    EXPECT_LT(cfg.point(2, 1)[0], 0);
    EXPECT_GT(cfg.point(2, 2)[0], 0);
}

TEST(SMinus, OddDimensionParity)
{
    EXPECT_EQ(gen_sminus(spec_for(ConstructionKind::s_minus, 3)).claimed_depth_at_origin % 2, 0u);
    EXPECT_EQ(gen_sprime(spec_for(ConstructionKind::s_prime, 3)).claimed_depth_at_origin % 2, 0u);
}

TEST(SPrime, DepthIsDSquaredPlusOne)
{
    for (std::size_t d = 1; d <= 3; ++d) {
        auto v = gen_sprime(spec_for(ConstructionKind::s_prime, d));
        EXPECT_EQ(v.claimed_depth_at_origin, d * d + 1);
        expect_generator_invariants(v);
    }
}

TEST(SPrime, SouthPoleAntipodeGeneratesOneSimplex)
{
    auto cfg = gen_sprime(spec_for(ConstructionKind::s_prime, 2)).config;
    std::vector<std::uint64_t> z;
    for (std::size_t i = 0; i < 3; ++i) z.push_back(zero_containing_count(cfg, 2, i));
    EXPECT_EQ(z, (std::vector<std::uint64_t>{2, 2, 1}));
}

TEST(SPlus, DepthIsDToTheDPlusOnePlusOne)
{
    const std::uint64_t expected[] = {2, 9, 82};
    for (std::size_t d = 1; d <= 3; ++d) {
        auto v = gen_splus(spec_for(ConstructionKind::s_plus, d));
        EXPECT_EQ(v.claimed_depth_at_origin, expected[d - 1]);
        expect_generator_invariants(v);
    }
}

TEST(SPlus, WitnessDecomposition)
{
    for (std::size_t d = 2; d <= 3; ++d) {
        auto cfg = gen_splus(spec_for(ConstructionKind::s_plus, d)).config;
        std::uint64_t dd = 1;
        for (std::size_t i = 0; i < d; ++i) dd *= d;
        const auto last = cfg.colours() - 1;
        ASSERT_EQ(cfg.colour(last).size(), d + 1);
        for (std::size_t i = 0; i < d; ++i) EXPECT_EQ(zero_containing_count(cfg, last, i), dd);
        EXPECT_EQ(zero_containing_count(cfg, last, d), 1u);
    }
}

TEST(Constructions, FastAtDeskScale)
{
    for (auto kind : {ConstructionKind::identical, ConstructionKind::s_minus, ConstructionKind::s_prime,
                      ConstructionKind::s_plus}) {
        for (std::size_t d = 1; d <= 3; ++d) {
            auto t0 = std::chrono::steady_clock::now();
            generate(spec_for(kind, d));
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
            EXPECT_LT(ms.count(), 1000) << to_string(kind) << " d=" << d;
        }
    }
}

TEST(Constructions, DeterministicAndValidated)
{
    auto a = gen_splus(spec_for(ConstructionKind::s_plus, 3));
    auto b = gen_splus(spec_for(ConstructionKind::s_plus, 3));
    EXPECT_EQ(a.config, b.config);
    auto bad = spec_for(ConstructionKind::s_minus, 2);
    bad.epsilon = Rational(0);
    EXPECT_THROW(gen_sminus(bad), InputError);
    bad = spec_for(ConstructionKind::s_minus, 0);
    EXPECT_THROW(gen_sminus(bad), InputError);
}

TEST(Constructions, ImpossibleClaimIsConstructionError)
{
    // A huge epsilon wrecks the latitude bands; verification must fail loudly.
    auto s = spec_for(ConstructionKind::s_plus, 3);
    s.epsilon = Rational(1, 2);
    s.max_retries = 1;
    try {
        gen_splus(s);
        FAIL() << "expected ConstructionError";
    } catch (const ConstructionError& e) {
        EXPECT_NE(e.achieved(), 82);
    }
}

TEST(RegularNgon, KarteszyValues)
{
    const std::uint64_t expected[] = {1, 5, 14, 30};
    for (std::size_t k = 0; k < 4; ++k) {
        const std::size_t n = 3 + 2 * k;
        auto g = gen_regular_ngon(n);
        ASSERT_EQ(g.points.size(), n);
        EXPECT_EQ(g.claimed_depth_at_centre, expected[k]);
        EXPECT_EQ(monochrome_depth(g.points, Point::origin(2), Containment::open).count, expected[k]);
        auto with_origin = g.points;
        with_origin.push_back(Point::origin(2));
        EXPECT_TRUE(in_general_position(with_origin));
    }
    EXPECT_THROW(gen_regular_ngon(6), InputError);
    EXPECT_THROW(gen_regular_ngon(2), InputError);
}

TEST(RandomCore, Postconditions)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t d = 1 + seed % 3;
        auto v = gen_random_core_config(d, d + 1, seed);
        expect_generator_invariants(v);
        if (d == 2) {
            EXPECT_GE(v.claimed_depth_at_origin, 5u);
        }
        EXPECT_EQ(gen_random_core_config(d, d + 1, seed).config, v.config);
    }
    EXPECT_THROW(gen_random_core_config(2, 2, 0), InputError);
}

}  // namespace
}  // namespace csd
