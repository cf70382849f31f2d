#include <gtest/gtest.h>

#include <utility>

#include "csd/predicates.hpp"
#include "csd/rational.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace csd {
namespace {

using P = Point;
Rational q(long n, long d = 1)
{
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::vector<Point> unit_triangle() { return {P::of({0, 0}), P::of({1, 0}), P::of({0, 1})}; }

TEST(Rational, ParseAndFormat)
{
    EXPECT_EQ(parse_rational("3/6"), q(1, 2));
    EXPECT_EQ(parse_rational(" -4 "), q(-4));
    EXPECT_EQ(parse_rational("0/7"), q(0));
    EXPECT_EQ(to_string(parse_rational("0/7")), "0");
    EXPECT_EQ(to_string(q(-6, 4)), "-3/2");
    EXPECT_THROW(parse_rational("1/0"), InputError);
    EXPECT_THROW(parse_rational("1.5"), InputError);
    EXPECT_THROW(parse_rational("1/-2"), InputError);
    EXPECT_THROW(parse_rational(""), InputError);
}

TEST(Rational, ApproxSqrtWithinTolerance)
{
    const Rational tol = dyadic(30);
    for (long n : {2L, 3L, 5L, 9999L}) {
        Rational x(n);
        Rational r = approx_sqrt(x, tol);
        EXPECT_LE(r * r, x);
        Rational hi = r + tol;
        EXPECT_GT(hi * hi, x);
    }
    EXPECT_EQ(approx_sqrt(q(9, 4), dyadic(4)), q(3, 2));
}

TEST(Orientation, Examples)
{
    EXPECT_EQ(orientation(std::vector{P::of({0, 0}), P::of({1, 0}), P::of({0, 1})}), Sign::positive);
    EXPECT_EQ(orientation(std::vector{P::of({0, 0}), P::of({1, 1}), P::of({2, 2})}), Sign::zero);
    EXPECT_EQ(orientation(std::vector{P::of({0, 0}), P::of({0, 1}), P::of({1, 0})}), Sign::negative);
}

TEST(Orientation, DimensionMismatchIsInputError)
{
    EXPECT_THROW(orientation(std::vector{P::of({0, 0}), P::of({1, 0, 0}), P::of({0, 1})}), InputError);
    EXPECT_THROW(orientation(std::vector{P::of({0, 0}), P::of({1, 0})}), InputError);
}

TEST(Orientation, AntisymmetricUnderTransposition)
{
    Rng rng(11);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t d = 2 + trial % 2;
        auto pts = testing::random_points(rng, d + 1, d);
        const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(d)));
        auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(d) - 1));
        if (j >= i) ++j;
        auto swapped = pts;
        std::swap(swapped[i], swapped[j]);
        ASSERT_EQ(orientation(swapped), -orientation(pts));
    }
}

TEST(Barycentric, Examples)
{
    auto tri = unit_triangle();
    auto c = barycentric_coordinates(P{q(1, 3), q(1, 3)}, tri);
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, (std::vector{q(1, 3), q(1, 3), q(1, 3)}));
    EXPECT_EQ(*barycentric_coordinates(P::of({0, 0}), tri), (std::vector{q(1), q(0), q(0)}));
    EXPECT_EQ(*barycentric_coordinates(P::of({2, 0}), tri), (std::vector{q(-1), q(2), q(0)}));
    EXPECT_FALSE(barycentric_coordinates(P::of({0, 0}),
                                         std::vector{P::of({0, 0}), P::of({1, 1}), P::of({2, 2})}));
    EXPECT_THROW(barycentric_coordinates(P::of({0, 0, 0}), tri), InputError);
}

TEST(Barycentric, SumsToOneAndReconstructs)
{
    Rng rng(12);
    int checked = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t d = 1 + trial % 3;
        auto verts = testing::random_points(rng, d + 1, d);
        auto p = testing::random_point(rng, d);
        auto lambda = barycentric_coordinates(p, verts);
        if (!lambda) {
            EXPECT_EQ(orientation(verts), Sign::zero);
            continue;
        }
        ++checked;
        Rational sum = 0;
        Point rebuilt(d);
        for (std::size_t i = 0; i <= d; ++i) {
            sum += (*lambda)[i];
            rebuilt += verts[i] * (*lambda)[i];
        }
        ASSERT_EQ(sum, 1);
        ASSERT_EQ(rebuilt, p);
    }
    EXPECT_GT(checked, 1500);
}

TEST(PointInSimplex, Examples)
{
    auto tri = unit_triangle();
    const P centroid{q(1, 3), q(1, 3)};
    EXPECT_TRUE(point_in_simplex(centroid, tri, Containment::open));
    EXPECT_FALSE(point_in_simplex(P::of({1, 0}), tri, Containment::open));
    EXPECT_TRUE(point_in_simplex(P::of({1, 0}), tri, Containment::closed));

    std::vector<Point> around{P::of({1, 0}), P::of({-1, 1}), P::of({-1, -1})};
    EXPECT_TRUE(point_in_simplex(P::of({0, 0}), around, Containment::open));
    EXPECT_EQ(*barycentric_coordinates(P::of({0, 0}), around), (std::vector{q(1, 2), q(1, 4), q(1, 4)}));
}

TEST(PointInSimplex, DegenerateClosedUsesHullOfDistinctVertices)
{
    // Repeated vertex: the simplex collapses to a segment through the origin.
    std::vector<Point> seg{P::of({-1, -1}), P::of({1, 1}), P::of({1, 1})};
    EXPECT_FALSE(point_in_simplex(P::of({0, 0}), seg, Containment::open));
    EXPECT_TRUE(point_in_simplex(P::of({0, 0}), seg, Containment::closed));
    EXPECT_FALSE(point_in_simplex(P::of({2, 2}), seg, Containment::closed));
    EXPECT_FALSE(point_in_simplex(P::of({1, 0}), seg, Containment::closed));
}

TEST(PointInSimplex, OpenImpliesClosed)
{
    Rng rng(13);
    for (int trial = 0; trial < 3000; ++trial) {
        const std::size_t d = 1 + trial % 3;
        auto verts = testing::random_points(rng, d + 1, d, 3, 1);
        auto p = testing::random_point(rng, d, 3, 2);
        if (point_in_simplex(p, verts, Containment::open)) {
            ASSERT_TRUE(point_in_simplex(p, verts, Containment::closed));
        }
    }
}

TEST(ConeContains, Examples)
{
    std::vector<Point> basis{P::of({1, 0}), P::of({0, 1})};
    EXPECT_TRUE(cone_contains(basis, P::of({1, 1})));
    EXPECT_FALSE(cone_contains(basis, P::of({-1, 0})));
    // T = {(1,0),(0,1),(-1,-1)}: antipode of (-1,-1) lies in cone of the others,
    // matching 0 in conv(T).
    EXPECT_TRUE(cone_contains(basis, -P::of({-1, -1})));
    EXPECT_TRUE(point_in_simplex(P::of({0, 0}), std::vector{P::of({1, 0}), P::of({0, 1}), P::of({-1, -1})},
                                 Containment::closed));
    EXPECT_THROW(cone_contains(std::vector{P::of({1, 1}), P::of({2, 2})}, P::of({1, 0})), DegenerateError);
}

TEST(ConeContains, AgreesWithAntipodeHullMembership)
{
    Rng rng(14);
    int checked = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t d = 2 + trial % 2;
        auto gens = testing::random_points(rng, d, d);
        auto v = testing::random_point(rng, d);
        if (v.is_zero()) continue;
        std::vector<Point> with_origin = gens;
        with_origin.push_back(Point::origin(d));
        if (!affinely_independent(with_origin)) continue;  // linearly dependent generators
        auto hull = gens;
        hull.push_back(-v);
        ++checked;
        ASSERT_EQ(cone_contains(gens, v), in_convex_hull(Point::origin(d), hull, false));
    }
    EXPECT_GT(checked, 1500);
}

TEST(InConvexHull, Examples)
{
    std::vector<Point> tri{P::of({1, 0}), P::of({-1, 1}), P::of({-1, -1})};
    EXPECT_TRUE(in_convex_hull(P::of({0, 0}), tri, true));
    const P midpoint{q(0), q(1, 2)};
    auto unit = unit_triangle();
    EXPECT_TRUE(in_convex_hull(midpoint, unit, false));
    EXPECT_FALSE(in_convex_hull(midpoint, unit, true));
    EXPECT_FALSE(in_convex_hull(P::of({0, 0}), std::vector{P::of({1, 0}), P::of({2, 0}), P::of({1, 1})}, false));
}

TEST(InConvexHull, LowerDimensionalSets)
{
    std::vector<Point> seg{P::of({0, 0}), P::of({2, 2}), P::of({1, 1})};
    EXPECT_TRUE(in_convex_hull(P::of({1, 1}), seg, false));
    EXPECT_FALSE(in_convex_hull(P::of({1, 1}), seg, true));
    EXPECT_FALSE(in_convex_hull(P::of({3, 3}), seg, false));
    EXPECT_FALSE(in_convex_hull(P::of({1, 0}), seg, false));
    EXPECT_TRUE(in_convex_hull(P::of({5, 5}), std::vector{P::of({5, 5})}, false));
    EXPECT_THROW(in_convex_hull(P::of({0, 0}), std::vector<Point>{}, false), InputError);
}

TEST(InConvexHull, CaratheodoryAgreesWithBasisEnumeration)
{
    Rng rng(15);
    int inside = 0;
    int strict_inside = 0;
    for (int trial = 0; trial < 600; ++trial) {
        const std::size_t d = 1 + trial % 3;
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform(0, 5));
        // Small integer coordinates make boundary and degenerate cases common.
        auto set = testing::random_points(rng, n, d, 3, 1);
        auto p = testing::random_point(rng, d, 3, 2);
        const bool expect = oracle::hull_feasible(p, set);
        ASSERT_EQ(in_convex_hull(p, set, false), expect) << "trial " << trial;
        const bool expect_strict = oracle::hull_interior(p, set);
        ASSERT_EQ(in_convex_hull(p, set, true), expect_strict) << "trial " << trial;
        inside += expect;
        strict_inside += expect_strict;
    }
    EXPECT_GT(inside, 50);
    EXPECT_GT(strict_inside, 20);
}

TEST(GeneralPosition, Examples)
{
    auto tri = unit_triangle();
    tri.push_back(P{q(1, 3), q(1, 3)});
    EXPECT_TRUE(in_general_position(tri));
    EXPECT_FALSE(in_general_position(std::vector{P::of({0, 0}), P::of({1, 1}), P::of({2, 2}), P::of({0, 1})}));
    EXPECT_FALSE(in_general_position(std::vector{P::of({0, 0, 0}), P::of({1, 0, 0}), P::of({0, 1, 0}),
                                                 P::of({1, 1, 0}), P::of({0, 0, 1})}));
}

TEST(GeneralPosition, RelativeToSet)
{
    std::vector<Point> pts{P::of({1, 0}), P::of({-1, 1}), P::of({-1, -1})};
    EXPECT_TRUE(general_position_relative(P::of({0, 0}), pts));
    EXPECT_FALSE(general_position_relative(P::of({-1, 0}), pts));  // on the edge x = -1
    EXPECT_FALSE(general_position_relative(P::of({1, 0}), pts));   // coincides with a point
    // Duplicated points span no hyperplane.
    std::vector<Point> dup{P::of({1, 0}), P::of({1, 0})};
    EXPECT_TRUE(general_position_relative(P::of({2, 0}), dup));
}

}  // namespace
}  // namespace csd
