#pragma once

/**
 * @file predicates.hpp
 * @brief Exact geometric predicates over rational points: orientation,
 * barycentric coordinates, simplex / cone / hull membership and general
 * position. Every answer is decided in exact arithmetic.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "csd/combinatorics.hpp"
#include "csd/linalg.hpp"
#include "csd/point.hpp"

namespace csd {

/// Open: p strictly inside. Closed: p anywhere in the convex hull.
enum class Containment { open, closed };

inline const char* to_string(Containment m) { return m == Containment::open ? "open" : "closed"; }

namespace detail {

inline std::size_t common_dim(std::span<const Point> pts)
{
    if (pts.empty()) throw InputError("empty point list");
    require_dim(pts, pts[0].dim());
    return pts[0].dim();
}

/// Rows are p_i - p_0 for i = 1..k.
inline linalg::Matrix difference_rows(std::span<const Point> pts)
{
    const std::size_t d = pts[0].dim();
    linalg::Matrix m(pts.size() - 1, d);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        for (std::size_t c = 0; c < d; ++c) m(i - 1, c) = pts[i][c] - pts[0][c];
    }
    return m;
}

template <typename Idx>
std::vector<Point> pick(std::span<const Point> pts, const Idx& idx)
{
    std::vector<Point> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(pts[i]);
    return out;
}

/**
 * The point set scaled by the lcm of all denominators, a positive factor that
 * preserves every orientation sign. When the scaled coordinates fit in 64 bits
 * the sign tests below run in overflow-checked 128-bit arithmetic; a nullopt
 * result means the caller must fall back to exact rationals.
 */
class IntegerFrame {
public:
    static constexpr std::size_t max_dim = 8;

    explicit IntegerFrame(std::span<const Point> pts)
    {
        if (pts.empty()) return;
        dim_ = pts[0].dim();
        if (dim_ > max_dim) return;
        Integer l = 1;
        for (const auto& p : pts) {
            for (const auto& x : p.coords()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        }
        coords_.reserve(pts.size() * dim_);
        for (const auto& p : pts) {
            for (const auto& x : p.coords()) {
                Integer v = x.get_num() * (l / x.get_den());
                if (!v.fits_slong_p()) {
                    coords_.clear();
                    return;
                }
                coords_.push_back(v.get_si());
            }
        }
        ok_ = true;
    }

    bool ok() const noexcept { return ok_; }
    std::int64_t at(std::size_t i, std::size_t c) const { return coords_[i * dim_ + c]; }

    /// Orientation sign of the d+1 points with the given indices.
    std::optional<int> orientation(const std::size_t* idx) const
    {
        if (!ok_) return std::nullopt;
        __int128 buf[max_dim * max_dim];
        for (std::size_t k = 0; k < dim_; ++k) {
            for (std::size_t c = 0; c < dim_; ++c) {
                buf[k * dim_ + c] = static_cast<__int128>(at(idx[k + 1], c)) - at(idx[0], c);
            }
        }
        return sign_of(buf);
    }

    /// Determinant of d points taken as vectors (in scaled coordinates).
    std::optional<__int128> vector_det(const std::size_t* idx) const
    {
        if (!ok_) return std::nullopt;
        __int128 buf[max_dim * max_dim];
        for (std::size_t k = 0; k < dim_; ++k) {
            for (std::size_t c = 0; c < dim_; ++c) buf[k * dim_ + c] = at(idx[k], c);
        }
        return linalg::detail::small_bareiss(buf, dim_);
    }

private:
    std::optional<int> sign_of(__int128* buf) const
    {
        auto det = linalg::detail::small_bareiss(buf, dim_);
        if (!det) return std::nullopt;
        return *det > 0 ? 1 : (*det < 0 ? -1 : 0);
    }

    std::size_t dim_ = 0;
    bool ok_ = false;
    std::vector<std::int64_t> coords_;
};

}  // namespace detail

/// Sign of det(p_2 - p_1, ..., p_{d+1} - p_1). Zero iff affinely dependent.
inline Sign orientation(std::span<const Point> points)
{
    const std::size_t d = detail::common_dim(points);
    if (points.size() != d + 1) {
        throw InputError("orientation needs d+1 points in dimension d");
    }
    return to_sign(linalg::determinant_sign(detail::difference_rows(points)));
}

/// Affine dimension of the point set (-1 for an empty set).
inline long affine_dimension(std::span<const Point> points)
{
    if (points.empty()) return -1;
    detail::common_dim(points);
    if (points.size() == 1) return 0;
    return static_cast<long>(linalg::rank(detail::difference_rows(points)));
}

inline bool affinely_independent(std::span<const Point> points)
{
    return affine_dimension(points) == static_cast<long>(points.size()) - 1;
}

/**
 * Barycentric coordinates of p with respect to d+1 vertices, or nullopt when
 * the vertices are affinely dependent. On success sum(l) = 1 and
 * p = sum(l_i v_i) exactly.
 */
inline std::optional<std::vector<Rational>> barycentric_coordinates(const Point& p,
                                                                    std::span<const Point> vertices)
{
    const std::size_t d = detail::common_dim(vertices);
    p.require_same_dim(vertices[0]);
    if (vertices.size() != d + 1) {
        throw InputError("barycentric coordinates need d+1 vertices in dimension d");
    }
    linalg::Matrix a(d + 1, d + 1);
    std::vector<Rational> b(d + 1);
    for (std::size_t j = 0; j <= d; ++j) {
        for (std::size_t r = 0; r < d; ++r) a(r, j) = vertices[j][r];
        a(d, j) = 1;
    }
    for (std::size_t r = 0; r < d; ++r) b[r] = p[r];
    b[d] = 1;
    return linalg::solve(std::move(a), std::move(b));
}

inline bool in_convex_hull(const Point& p, std::span<const Point> set, bool strict);

/**
 * Containment of p in the simplex spanned by d+1 vertices. Open mode needs a
 * nondegenerate simplex; closed mode falls back to hull membership of the
 * distinct vertices when they are affinely dependent.
 */
inline bool point_in_simplex(const Point& p, std::span<const Point> vertices, Containment mode)
{
    auto lambda = barycentric_coordinates(p, vertices);
    if (!lambda) {
        if (mode == Containment::open) return false;
        std::vector<Point> distinct(vertices.begin(), vertices.end());
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        return in_convex_hull(p, distinct, false);
    }
    for (const auto& l : *lambda) {
        if (mode == Containment::open ? l <= 0 : l < 0) return false;
    }
    return true;
}

/// v in cone(generators), generators being d linearly independent vectors.
/// Throws DegenerateError when they are linearly dependent.
inline bool cone_contains(std::span<const Point> generators, const Point& v)
{
    const std::size_t d = v.dim();
    if (generators.size() != d) throw InputError("a simplicial cone needs d generators");
    require_dim(generators, d);
    linalg::Matrix g(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t r = 0; r < d; ++r) g(r, j) = generators[j][r];
    }
    std::vector<Rational> rhs(v.coords().begin(), v.coords().end());
    auto a = linalg::solve(std::move(g), std::move(rhs));
    if (!a) throw DegenerateError("cone generators are linearly dependent");
    return std::all_of(a->begin(), a->end(), [](const Rational& x) { return x >= 0; });
}

namespace detail {

/// Greedy maximal affinely independent subset (indices into pts).
inline std::vector<std::size_t> affine_basis(std::span<const Point> pts)
{
    std::vector<std::size_t> basis{0};
    std::vector<Point> chosen{pts[0]};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        chosen.push_back(pts[i]);
        if (affinely_independent(chosen)) {
            basis.push_back(i);
        } else {
            chosen.pop_back();
        }
        if (basis.size() == pts[0].dim() + 1) break;
    }
    return basis;
}

/// Coordinates of q in the affine frame (b_0; b_1 - b_0, ..., b_k - b_0), or
/// nullopt when q is not in the affine hull of the frame.
inline std::optional<Point> affine_coordinates(const Point& q, std::span<const Point> frame)
{
    const std::size_t k = frame.size() - 1;
    const std::size_t d = q.dim();
    // Normal equations D^T D mu = D^T (q - b0), then check D mu = q - b0.
    linalg::Matrix gram(k, k);
    std::vector<Rational> rhs(k);
    Point rel = q - frame[0];
    std::vector<Point> cols;
    cols.reserve(k);
    for (std::size_t i = 1; i <= k; ++i) cols.push_back(frame[i] - frame[0]);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(cols[i], cols[j]);
        rhs[i] = dot(cols[i], rel);
    }
    auto mu = linalg::solve(std::move(gram), std::move(rhs));
    if (!mu) return std::nullopt;
    for (std::size_t r = 0; r < d; ++r) {
        Rational s = 0;
        for (std::size_t i = 0; i < k; ++i) s += (*mu)[i] * cols[i][r];
        if (s != rel[r]) return std::nullopt;
    }
    return Point(std::move(*mu));
}

/// Caratheodory search in a full-dimensional set: closed membership in some
/// nondegenerate simplex spanned by d+1 of the points.
inline bool caratheodory_full_dim(const Point& p, std::span<const Point> pts)
{
    const std::size_t d = p.dim();
    bool found = false;
    for_each_combination(pts.size(), d + 1, [&](const std::vector<std::size_t>& idx) {
        auto verts = pick(pts, idx);
        auto lambda = barycentric_coordinates(p, verts);
        if (!lambda) return true;
        if (std::all_of(lambda->begin(), lambda->end(), [](const Rational& l) { return l >= 0; })) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

}  // namespace detail

/**
 * Membership of p in conv(set). Non-strict: Caratheodory search over
 * (d+1)-subsets after restricting to the affine hull of the set. Strict:
 * additionally p must lie strictly inside every supporting hyperplane spanned
 * by d affinely independent points of the set (brute-force facet enumeration);
 * a lower-dimensional set has no interior.
 */
inline bool in_convex_hull(const Point& p, std::span<const Point> set, bool strict)
{
    if (set.empty()) throw InputError("convex hull of an empty set");
    const std::size_t d = detail::common_dim(set);
    p.require_same_dim(set[0]);

    auto basis_idx = detail::affine_basis(set);
    const std::size_t k = basis_idx.size() - 1;
    if (strict && k < d) return false;

    bool member = false;
    if (k == 0) {
        member = (p == set[0]);
    } else if (k == d) {
        member = detail::caratheodory_full_dim(p, set);
    } else {
        auto frame = detail::pick(set, basis_idx);
        auto local_p = detail::affine_coordinates(p, frame);
        if (local_p) {
            std::vector<Point> local;
            local.reserve(set.size());
            for (const auto& s : set) local.push_back(*detail::affine_coordinates(s, frame));
            member = detail::caratheodory_full_dim(*local_p, local);
        }
    }
    if (!member || !strict) return member;

    bool interior = true;
    for_each_combination(set.size(), d, [&](const std::vector<std::size_t>& idx) {
        auto face = detail::pick(set, idx);
        if (!affinely_independent(face)) return true;
        int side = 0;
        bool supporting = true;
        face.push_back(p);
        for (const auto& s : set) {
            face.back() = s;
            int o = static_cast<int>(orientation(face));
            if (o == 0) continue;
            if (side == 0) side = o;
            if (o != side) {
                supporting = false;
                break;
            }
        }
        if (!supporting) return true;
        face.back() = p;
        if (static_cast<int>(orientation(face)) != side) {
            interior = false;
            return false;
        }
        return true;
    });
    return interior;
}

/**
 * Every (d+1)-subset affinely independent; for fewer than d+1 points, the
 * whole set affinely independent.
 */
inline bool in_general_position(std::span<const Point> points)
{
    if (points.empty()) return true;
    const std::size_t d = detail::common_dim(points);
    if (points.size() < d + 1) return affinely_independent(points);
    const detail::IntegerFrame frame(points);
    return for_each_combination(points.size(), d + 1, [&](const std::vector<std::size_t>& idx) {
        if (auto s = frame.orientation(idx.data())) return *s != 0;
        return orientation(detail::pick(points, idx)) != Sign::zero;
    });
}

/**
 * p avoids every hyperplane spanned by d affinely independent points of the
 * set, and every point of the set. This is the part of general position that
 * concerns p alone, so it also makes sense for degenerate sets.
 */
inline bool general_position_relative(const Point& p, std::span<const Point> points)
{
    if (points.empty()) return true;
    const std::size_t d = detail::common_dim(points);
    p.require_same_dim(points[0]);
    for (const auto& s : points) {
        if (s == p) return false;
    }
    std::vector<Point> with_p(points.begin(), points.end());
    with_p.push_back(p);
    const detail::IntegerFrame frame(with_p);
    return for_each_combination(points.size(), d, [&](const std::vector<std::size_t>& idx) {
        std::vector<std::size_t> full(idx);
        full.push_back(points.size());
        auto s = frame.orientation(full.data());
        if (!s) s = static_cast<int>(orientation(detail::pick(std::span<const Point>(with_p), full)));
        // A nonzero orientation already shows the d points are independent.
        if (*s != 0) return true;
        return !affinely_independent(detail::pick(points, idx));
    });
}

}  // namespace csd
