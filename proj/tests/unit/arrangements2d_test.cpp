#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "csd/arrangements2d.hpp"
#include "csd/constructions.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace csd {
namespace {

using P = Point;
using Seq = std::vector<std::uint64_t>;

std::vector<Point> polar_points(std::initializer_list<double> degrees)
{
    std::vector<Point> out;
    for (double deg : degrees) {
        const long double a = deg * 3.14159265358979323846L / 180.0L;
        out.push_back(P{rationalize(std::cos(a), dyadic(20)), rationalize(std::sin(a), dyadic(20))});
    }
    return out;
}

bool in_closed_planar_cone(const Point& x, const Point& y, const Point& v)
{
    Rational det = x[0] * y[1] - x[1] * y[0];
    Rational a = (v[0] * y[1] - v[1] * y[0]) / det;
    Rational b = (x[0] * v[1] - x[1] * v[0]) / det;
    return a >= 0 && b >= 0;
}

bool valid_pair(const std::vector<Point>& xs, const std::vector<Point>& ys)
{
    for (const auto& s : {xs, ys}) {
        for (const auto& p : s) {
            if (p.is_zero()) return false;
        }
        if (!oracle::hull_interior(Point::origin(2), s)) return false;
    }
    std::vector<Point> all = xs;
    all.insert(all.end(), ys.begin(), ys.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (all[i][0] * all[j][1] == all[i][1] * all[j][0]) return false;
        }
    }
    return true;
}

TEST(CrossingDelta, Examples)
{
    EXPECT_EQ(crossing_delta(0, 4, 1, 2), 2);
    EXPECT_EQ(crossing_delta(5, 6, 0, 3), 9);
    for (long long k : {1LL, 2LL}) {
        const long long old_depth = 3;
        const long long updated = crossing_delta(old_depth - k, 4, k, 2);
        EXPECT_EQ(std::llabs(updated - old_depth), std::llabs((3 - k) - k));
        EXPECT_EQ(std::llabs(updated - old_depth), 1);
    }
    EXPECT_THROW(crossing_delta(-1, 4, 1, 2), InputError);
    EXPECT_THROW(crossing_delta(0, 4, 4, 2), InputError);
    EXPECT_THROW(crossing_delta(0, 4, -1, 2), InputError);
    EXPECT_THROW(crossing_delta(0, 4, 0, 0), InputError);
}

TEST(CellDepthSequence, SMinusColoursXY)
{
    auto cfg = gen_sminus({ConstructionKind::s_minus, 2}).config;
    auto arr = cell_depth_sequence(cfg.colour(0), cfg.colour(1));
    EXPECT_EQ(canonical_rotation(arr.cell_depths), (Seq{1, 2, 3, 4, 3, 2}));
    EXPECT_EQ(classify_family(arr.cell_depths), CellFamily::staircase);
    EXPECT_TRUE(verify_cell_depth_lemma(arr).lemma_ok);
}

TEST(CellDepthSequence, RotatedTriangles)
{
    auto xs = polar_points({90, 210, 330});
    auto ys = polar_points({140, 260, 20});
    auto arr = cell_depth_sequence(xs, ys);
    // Same cyclic sequence as 3,2,3,2,3,2.
    EXPECT_EQ(canonical_rotation(arr.cell_depths), canonical_rotation(Seq{3, 2, 3, 2, 3, 2}));
    EXPECT_EQ(format_sequence(canonical_rotation(arr.cell_depths)), "2,3,2,3,2,3");
    EXPECT_EQ(classify_family(arr.cell_depths), CellFamily::alternating);
    EXPECT_EQ(arr.boundaries.size(), 6u);
}

TEST(CellDepthSequence, DegenerateInputs)
{
    auto xs = polar_points({90, 210, 330});
    EXPECT_THROW(cell_depth_sequence(xs, xs), DegenerateError);
    auto ys = polar_points({90, 250, 20});
    ys[0] = xs[0] * Rational(3);
    EXPECT_THROW(cell_depth_sequence(xs, ys), DegenerateError);
    auto off = polar_points({10, 20, 30});
    EXPECT_THROW(cell_depth_sequence(xs, off), DegenerateError);
    EXPECT_THROW(cell_depth_sequence(std::vector{P::of({1, 0}), P::of({-1, 1})}, xs), InputError);
}

TEST(CellLemma, Examples)
{
    EXPECT_TRUE(verify_cell_depth_lemma(Seq{1, 2, 3, 4, 3, 2}).lemma_ok);
    EXPECT_TRUE(verify_cell_depth_lemma(Seq{3, 2, 3, 2, 3, 2}).lemma_ok);
    auto bad = verify_cell_depth_lemma(Seq{1, 2, 1, 2, 3, 2});
    EXPECT_FALSE(bad.lemma_ok);
    EXPECT_EQ(bad.min_depth, 1u);
    EXPECT_EQ(bad.count_of_min_cells, 2u);
    EXPECT_FALSE(verify_cell_depth_lemma(Seq{0, 2, 3, 4, 3, 2}).lemma_ok);
}

TEST(CanonicalRotation, SmallestRotation)
{
    EXPECT_EQ(canonical_rotation(Seq{3, 4, 3, 2, 1, 2}), (Seq{1, 2, 3, 4, 3, 2}));
    EXPECT_EQ(canonical_rotation(Seq{}), Seq{});
}

TEST(CellDepthSequence, RandomPairsAgreeWithPerConeArcs)
{
    Rng rng(31);
    std::map<std::string, int> families;
    int checked = 0;
    while (checked < 500) {
        auto xs = testing::random_points(rng, 3, 2, 20, 1);
        auto ys = testing::random_points(rng, 3, 2, 20, 1);
        if (!valid_pair(xs, ys)) continue;
        ++checked;
        auto arr = cell_depth_sequence(xs, ys);
        const std::size_t n = arr.boundaries.size();
        ASSERT_EQ(n, 6u);
        // Oracle: a cell lies in cone(x, y) iff both of its boundary rays lie in the closed cone.
        Seq covered(n, 0);
        std::uint64_t cone_total = 0;
        for (const auto& x : xs) {
            for (const auto& y : ys) {
                for (std::size_t i = 0; i < n; ++i) {
                    const auto& a = arr.boundaries[i].direction;
                    const auto& b = arr.boundaries[(i + 1) % n].direction;
                    if (in_closed_planar_cone(x, y, a) && in_closed_planar_cone(x, y, b)) {
                        ++covered[i];
                        ++cone_total;
                    }
                }
            }
        }
        ASSERT_EQ(arr.cell_depths, covered);
        std::uint64_t sum = 0;
        for (auto v : arr.cell_depths) sum += v;
        ASSERT_EQ(sum, cone_total);
        for (std::size_t i = 0; i < n; ++i) {
            const auto mid = arr.boundaries[i].direction + arr.boundaries[(i + 1) % n].direction;
            std::uint64_t direct = 0;
            for (const auto& x : xs) {
                for (const auto& y : ys) direct += oracle::strictly_in_planar_cone(x, y, mid);
            }
            ASSERT_EQ(direct, arr.cell_depths[i]);
        }
        ASSERT_TRUE(verify_cell_depth_lemma(arr).lemma_ok);
        families[format_sequence(canonical_rotation(arr.cell_depths))]++;
    }
    for (const auto& [seq, count] : families) {
        std::cout << "  sequence " << seq << ": " << count << "\n";
    }
}

}  // namespace
}  // namespace csd
