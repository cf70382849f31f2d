#pragma once

/**
 * @file arrangements2d.hpp
 * @brief Cell depths on the circle for two colour classes of three points in
 * the plane. The six rays through the points cut the circle into six arcs
 * (cells); the depth of a cell is the number of colourful cones cone(x, y),
 * x in X and y in Y, containing it. The sequence is computed by brute force in
 * one seed cell and then carried around the circle by crossing updates, and
 * every cell is re-checked by brute force.
 */

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "csd/predicates.hpp"

namespace csd {

/// z after crossing: l + u - k - (d - 1).
inline long long crossing_delta(long long l, long long u, long long k, long long d)
{
    if (d < 1) throw InputError("crossing_delta: d must be >= 1");
    if (l < 0) throw InputError("crossing_delta: l must be >= 0");
    if (k < 0 || k > u - (d - 1)) throw InputError("crossing_delta: need 0 <= k <= u - (d - 1)");
    return l + u - k - (d - 1);
}

struct Ray {
    std::size_t colour = 0;  // 0 for X, 1 for Y
    std::size_t index = 0;
    Point direction{2};
};

/// Cell i is the open arc from boundaries[i] counterclockwise to boundaries[i+1].
struct CircularArrangement {
    std::vector<Ray> boundaries;
    std::vector<std::uint64_t> cell_depths;
};

struct CellReport {
    std::vector<std::uint64_t> sequence;
    std::uint64_t min_depth = 0;
    std::size_t count_of_min_cells = 0;
    bool lemma_ok = false;
};

namespace planar {

inline Rational cross(const Point& a, const Point& b) { return a[0] * b[1] - a[1] * b[0]; }

/// 0 for angles in [0, pi), 1 for [pi, 2 pi).
inline int half(const Point& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }

/// Strict angular order starting at the positive x-axis.
inline bool angle_less(const Point& a, const Point& b)
{
    const int ha = half(a);
    const int hb = half(b);
    if (ha != hb) return ha < hb;
    return cross(a, b) > 0;
}

inline bool same_ray(const Point& a, const Point& b) { return cross(a, b) == 0 && dot(a, b) > 0; }

/// v strictly inside the (convex, non-degenerate) cone spanned by x and y.
inline bool in_open_cone(const Point& x, const Point& y, const Point& v)
{
    const int s = sgn(cross(x, y));
    if (s == 0) return false;
    return sgn(cross(x, v)) == s && sgn(cross(v, y)) == s;
}

/// v strictly between a and b, going counterclockwise from a (arc < pi).
inline bool strictly_between(const Point& a, const Point& b, const Point& v)
{
    return cross(a, v) > 0 && cross(v, b) > 0;
}

}  // namespace planar

/// Number of cones cone(x, y) containing direction v in their interior.
inline std::uint64_t direction_depth(std::span<const Point> xs, std::span<const Point> ys, const Point& v)
{
    std::uint64_t n = 0;
    for (const auto& x : xs) {
        for (const auto& y : ys) n += planar::in_open_cone(x, y, v);
    }
    return n;
}

namespace detail {

inline void require_triangle_around_origin(std::span<const Point> pts, const char* name)
{
    if (pts.size() != 3) throw InputError(std::string("colour ") + name + " needs exactly 3 points");
    require_dim(pts, 2);
    for (const auto& p : pts) {
        if (p.is_zero()) throw DegenerateError(std::string("colour ") + name + " contains the origin as a point");
    }
    if (!in_convex_hull(Point::origin(2), pts, true)) {
        throw DegenerateError(std::string("origin is not strictly inside conv(") + name + ")");
    }
}

/// A direction strictly inside the arc from a to b (counterclockwise, arc < pi).
inline Point interior_direction(const Point& a, const Point& b)
{
    static const std::array<std::pair<long, long>, 5> weights{{{1, 1}, {1, 2}, {2, 1}, {1, 3}, {3, 1}}};
    for (auto [wa, wb] : weights) {
        Point v = a * Rational(wa) + b * Rational(wb);
        if (planar::strictly_between(a, b, v)) return v;
    }
    throw DegenerateError("could not place a direction strictly inside a cell");
}

}  // namespace detail

/**
 * Cyclic cell depths for colour classes X and Y (3 points each) with the
 * origin strictly inside both hulls and no two points on a common line
 * through the origin unless they are in the same class and opposite.
 */
inline CircularArrangement cell_depth_sequence(std::span<const Point> xs, std::span<const Point> ys)
{
    detail::require_triangle_around_origin(xs, "X");
    detail::require_triangle_around_origin(ys, "Y");
    for (const auto& x : xs) {
        for (const auto& y : ys) {
            if (planar::cross(x, y) == 0) throw DegenerateError("an X point and a Y point are collinear with the origin");
        }
    }

    CircularArrangement arr;
    for (std::size_t i = 0; i < 3; ++i) arr.boundaries.push_back({0, i, xs[i]});
    for (std::size_t i = 0; i < 3; ++i) arr.boundaries.push_back({1, i, ys[i]});
    std::sort(arr.boundaries.begin(), arr.boundaries.end(),
              [](const Ray& a, const Ray& b) { return planar::angle_less(a.direction, b.direction); });
    const std::size_t n = arr.boundaries.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (planar::same_ray(arr.boundaries[i].direction, arr.boundaries[(i + 1) % n].direction)) {
            throw DegenerateError("two points define the same ray");
        }
    }

    auto brute = [&](std::size_t cell) {
        const auto v = detail::interior_direction(arr.boundaries[cell].direction, arr.boundaries[(cell + 1) % n].direction);
        return direction_depth(xs, ys, v);
    };

    // Crossing ray q counterclockwise: the k cones through q whose other
    // generator lies clockwise of q are left, the 3 - k on the other side entered.
    arr.cell_depths.assign(n, 0);
    arr.cell_depths[0] = brute(0);
    std::uint64_t depth = arr.cell_depths[0];
    for (std::size_t step = 1; step <= n; ++step) {
        const Ray& q = arr.boundaries[step % n];
        const auto& others = q.colour == 0 ? ys : xs;
        long long k = 0;
        for (const auto& o : others) k += planar::cross(q.direction, o) < 0;
        const long long u = 1 + static_cast<long long>(others.size());
        depth = static_cast<std::uint64_t>(crossing_delta(static_cast<long long>(depth) - k, u, k, 2));
        if (step < n) arr.cell_depths[step] = depth;
    }
    if (depth != arr.cell_depths[0]) throw DegenerateError("crossing updates do not close up around the circle");
    for (std::size_t i = 0; i < n; ++i) {
        if (brute(i) != arr.cell_depths[i]) throw DegenerateError("propagated depth disagrees with direct count");
    }
    return arr;
}

/// Lexicographically smallest rotation.
inline std::vector<std::uint64_t> canonical_rotation(const std::vector<std::uint64_t>& seq)
{
    std::vector<std::uint64_t> best = seq;
    for (std::size_t r = 1; r < seq.size(); ++r) {
        std::vector<std::uint64_t> rot(seq.begin() + static_cast<std::ptrdiff_t>(r), seq.end());
        rot.insert(rot.end(), seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(r));
        best = std::min(best, rot);
    }
    return best;
}

inline std::string format_sequence(const std::vector<std::uint64_t>& seq)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < seq.size(); ++i) out << (i ? "," : "") << seq[i];
    return out.str();
}

/// Every cell has depth >= 1, and a depth-1 cell is unique with all others >= 2.
inline CellReport verify_cell_depth_lemma(const std::vector<std::uint64_t>& sequence)
{
    CellReport rep;
    rep.sequence = sequence;
    if (sequence.empty()) return rep;
    rep.min_depth = *std::min_element(sequence.begin(), sequence.end());
    rep.count_of_min_cells = static_cast<std::size_t>(std::count(sequence.begin(), sequence.end(), rep.min_depth));
    const auto ones = std::count(sequence.begin(), sequence.end(), std::uint64_t{1});
    rep.lemma_ok = rep.min_depth >= 1 && ones <= 1;
    return rep;
}

inline CellReport verify_cell_depth_lemma(const CircularArrangement& arr)
{
    return verify_cell_depth_lemma(arr.cell_depths);
}

enum class CellFamily { staircase, alternating, other };

inline const char* to_string(CellFamily f)
{
    switch (f) {
    case CellFamily::staircase: return "1,2,3,4,3,2";
    case CellFamily::alternating: return "2,3,2,3,2,3";
    case CellFamily::other: return "other";
    }
    return "?";
}

inline CellFamily classify_family(const std::vector<std::uint64_t>& sequence)
{
    const auto c = canonical_rotation(sequence);
    if (c == std::vector<std::uint64_t>{1, 2, 3, 4, 3, 2}) return CellFamily::staircase;
    if (c == std::vector<std::uint64_t>{2, 3, 2, 3, 2, 3}) return CellFamily::alternating;
    return CellFamily::other;
}

}  // namespace csd
