#pragma once

/**
 * @file depth.hpp
 * @brief Monochrome and colourful simplicial depth, core membership, and the
 * per-point counts z_S(p) computed two ways (simplex side and cone side).
 *
 * Colourful counts translate the query point to the origin first; every
 * enumeration runs in lexicographic order (colour subsets, then point index
 * within each colour) so witness lists are reproducible.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "csd/combinatorics.hpp"
#include "csd/configuration.hpp"
#include "csd/linalg.hpp"
#include "csd/predicates.hpp"
#include "csd/random.hpp"

namespace csd {

/// One vertex per chosen colour: (colour index, point index), colours increasing.
/// Monochrome witnesses use colour 0 and strictly increasing point indices.
using SimplexPick = std::vector<std::pair<std::size_t, std::size_t>>;

struct DepthReport {
    Containment mode = Containment::open;
    std::uint64_t count = 0;
    /// Affinely dependent vertex tuples met during the enumeration.
    std::uint64_t degenerate = 0;
    std::optional<std::vector<SimplexPick>> witnesses;
};

namespace detail {

struct SimplexTest {
    bool contains = false;
    bool degenerate = false;
};

/// Containment of the origin. With M_j the d x d determinant of the vertices
/// other than j, the barycentric coordinate of vertex j is proportional to
/// (-1)^j M_j, so only signs are needed.
inline SimplexTest test_origin_simplex(std::span<const Point> vertices, Containment mode)
{
    SimplexTest t;
    const std::size_t d = vertices.size() - 1;
    std::vector<int> signs(d + 1);
    Rational total = 0;
    linalg::Matrix minor(d, d);
    for (std::size_t j = 0; j <= d; ++j) {
        for (std::size_t k = 0, row = 0; k <= d; ++k) {
            if (k == j) continue;
            for (std::size_t c = 0; c < d; ++c) minor(row, c) = vertices[k][c];
            ++row;
        }
        Rational m = linalg::determinant(minor);
        if (j % 2) m = -m;
        signs[j] = sgn(m);
        total += m;
    }
    if (total == 0) {
        t.degenerate = true;
        t.contains = mode == Containment::closed && point_in_simplex(Point::origin(d), vertices, mode);
        return t;
    }
    const int s = sgn(total);
    t.contains = std::all_of(signs.begin(), signs.end(), [&](int x) {
        return mode == Containment::open ? x == s : x != -s;
    });
    return t;
}

/// Origin-containment and cone tests over a fixed list of points, addressed
/// by index, using the integer frame when possible.
class IndexedPoints {
public:
    explicit IndexedPoints(std::vector<Point> pts) : pts_(std::move(pts)), frame_(pts_) {}

    const Point& operator[](std::size_t i) const { return pts_[i]; }

    SimplexTest origin_in_simplex(const std::vector<std::size_t>& idx, Containment mode) const
    {
        const std::size_t d = idx.size() - 1;
        if (frame_.ok()) {
            std::size_t minor[IntegerFrame::max_dim];
            int signs[IntegerFrame::max_dim + 1];
            __int128 total = 0;
            bool fine = true;
            for (std::size_t j = 0; j <= d && fine; ++j) {
                for (std::size_t k = 0, row = 0; k <= d; ++k) {
                    if (k != j) minor[row++] = idx[k];
                }
                auto m = frame_.vector_det(minor);
                if (!m) {
                    fine = false;
                    break;
                }
                const __int128 v = j % 2 ? -*m : *m;
                signs[j] = v > 0 ? 1 : (v < 0 ? -1 : 0);
                fine = !__builtin_add_overflow(total, v, &total);
            }
            if (fine && total != 0) {
                const int s = total > 0 ? 1 : -1;
                SimplexTest t;
                t.contains = std::all_of(signs, signs + d + 1, [&](int x) {
                    return mode == Containment::open ? x == s : x != -s;
                });
                return t;
            }
        }
        return test_origin_simplex(pick(std::span<const Point>(pts_), idx), mode);
    }

    /// Whether point `target` lies in the closed cone spanned by the points
    /// `gens` (d of them); nullopt when the generators are dependent.
    std::optional<bool> cone_contains(const std::vector<std::size_t>& gens, std::size_t target) const
    {
        const std::size_t d = gens.size();
        if (frame_.ok()) {
            std::size_t rows[IntegerFrame::max_dim];
            std::copy(gens.begin(), gens.end(), rows);
            auto base = frame_.vector_det(rows);
            if (base) {
                if (*base == 0) return std::nullopt;
                bool fine = true;
                bool inside = true;
                for (std::size_t k = 0; k < d && fine && inside; ++k) {
                    rows[k] = target;
                    auto dk = frame_.vector_det(rows);
                    rows[k] = gens[k];
                    if (!dk) {
                        fine = false;
                    } else if ((*dk > 0 && *base < 0) || (*dk < 0 && *base > 0)) {
                        inside = false;
                    }
                }
                if (fine) return inside;
            }
        }
        try {
            return csd::cone_contains(pick(std::span<const Point>(pts_), gens), pts_[target]);
        } catch (const DegenerateError&) {
            return std::nullopt;
        }
    }

private:
    std::vector<Point> pts_;
    IntegerFrame frame_;
};

/// Enumerates colourful tuples: all (d+1)-subsets of the allowed colours, then
/// the product of their classes. `fixed` pins one (colour, point) pick. The
/// callback gets indices into all_points() and the pick.
template <typename F>
void for_each_colourful_tuple(const ColourfulConfiguration& cfg,
                              std::optional<std::pair<std::size_t, std::size_t>> fixed, F&& f)
{
    const std::size_t d = cfg.dim();
    const std::size_t r = cfg.colours();
    std::vector<std::size_t> offset(r, 0);
    for (std::size_t c = 1; c < r; ++c) offset[c] = offset[c - 1] + cfg.colour(c - 1).size();
    std::vector<std::size_t> flat(d + 1);
    SimplexPick pick(d + 1);
    for_each_combination(r, d + 1, [&](const std::vector<std::size_t>& colours) {
        if (fixed && std::find(colours.begin(), colours.end(), fixed->first) == colours.end()) {
            return true;
        }
        std::vector<std::size_t> sizes;
        sizes.reserve(d + 1);
        for (auto c : colours) {
            sizes.push_back(fixed && c == fixed->first ? 1 : cfg.colour(c).size());
        }
        for_each_product(sizes, [&](const std::vector<std::size_t>& choice) {
            for (std::size_t k = 0; k <= d; ++k) {
                const std::size_t c = colours[k];
                const std::size_t i = fixed && c == fixed->first ? fixed->second : choice[k];
                flat[k] = offset[c] + i;
                pick[k] = {c, i};
            }
            f(static_cast<const std::vector<std::size_t>&>(flat), static_cast<const SimplexPick&>(pick));
            return true;
        });
        return true;
    });
}

}  // namespace detail

/// Simplicial depth of p with respect to a single point set: the number of
/// (d+1)-subsets whose simplex contains p.
inline DepthReport monochrome_depth(std::span<const Point> set, const Point& p, Containment mode,
                                    bool want_witnesses = false)
{
    const std::size_t d = p.dim();
    require_dim(set, d);
    if (set.size() < d + 1) throw InputError("monochrome depth needs at least d+1 points");
    DepthReport rep;
    rep.mode = mode;
    if (want_witnesses) rep.witnesses.emplace();
    std::vector<Point> moved;
    moved.reserve(set.size());
    for (const auto& s : set) moved.push_back(s - p);
    const detail::IndexedPoints pts(std::move(moved));
    for_each_combination(set.size(), d + 1, [&](const std::vector<std::size_t>& idx) {
        auto t = pts.origin_in_simplex(idx, mode);
        rep.degenerate += t.degenerate;
        if (t.contains) {
            ++rep.count;
            if (want_witnesses) {
                SimplexPick w;
                for (auto i : idx) w.emplace_back(0, i);
                rep.witnesses->push_back(std::move(w));
            }
        }
        return true;
    });
    return rep;
}

/// Colourful simplicial depth: simplices with vertices from d+1 distinct colours.
inline DepthReport colourful_depth(const ColourfulConfiguration& cfg, const Point& p, Containment mode,
                                   bool want_witnesses = false)
{
    if (cfg.colours() < cfg.dim() + 1) throw InputError("colourful depth needs at least d+1 colours");
    const detail::IndexedPoints pts(cfg.centred_at(p).all_points());
    DepthReport rep;
    rep.mode = mode;
    if (want_witnesses) rep.witnesses.emplace();
    detail::for_each_colourful_tuple(cfg, std::nullopt,
                                     [&](const std::vector<std::size_t>& flat, const SimplexPick& pick) {
                                         auto t = pts.origin_in_simplex(flat, mode);
                                         rep.degenerate += t.degenerate;
                                         if (t.contains) {
                                             ++rep.count;
                                             if (want_witnesses) rep.witnesses->push_back(pick);
                                         }
                                     });
    return rep;
}

/// p in conv(S_i) for every colour i (strictly inside each, if strict).
inline bool core_membership(const ColourfulConfiguration& cfg, const Point& p, bool strict)
{
    for (const auto& cls : cfg.classes()) {
        if (!in_convex_hull(p, cls, strict)) return false;
    }
    return true;
}

/// z_S(x): colourful simplices containing the origin whose pick at `colour`
/// is point `index`.
inline std::uint64_t zero_containing_count(const ColourfulConfiguration& cfg, std::size_t colour,
                                           std::size_t index, Containment mode = Containment::open)
{
    cfg.point(colour, index);
    if (cfg.colours() < cfg.dim() + 1) throw InputError("colourful counts need at least d+1 colours");
    const detail::IndexedPoints pts(cfg.all_points());
    std::uint64_t n = 0;
    detail::for_each_colourful_tuple(cfg, std::make_pair(colour, index),
                                     [&](const std::vector<std::size_t>& flat, const SimplexPick&) {
                                         n += pts.origin_in_simplex(flat, mode).contains;
                                     });
    return n;
}

struct ConeCount {
    std::uint64_t count = 0;
    /// Generator tuples skipped because they were linearly dependent.
    std::uint64_t degenerate = 0;
};

/// Colourful simplicial cones, one generator from each of d colours other
/// than `colour`, that contain -v.
inline ConeCount antipodal_cone_count(const ColourfulConfiguration& cfg, std::size_t colour,
                                      const Point& v)
{
    cfg.check_colour(colour);
    if (v.dim() != cfg.dim()) throw InputError("direction dimension mismatch");
    if (v.is_zero()) throw InputError("antipodal cone count needs a nonzero direction");
    const std::size_t d = cfg.dim();
    std::vector<std::size_t> others;
    std::vector<std::size_t> offset;
    std::vector<Point> pts;
    for (std::size_t c = 0; c < cfg.colours(); ++c) {
        if (c == colour) continue;
        others.push_back(c);
        offset.push_back(pts.size());
        pts.insert(pts.end(), cfg.colour(c).begin(), cfg.colour(c).end());
    }
    const std::size_t target = pts.size();
    pts.push_back(-v);
    const detail::IndexedPoints indexed(std::move(pts));
    ConeCount out;
    std::vector<std::size_t> gens(d);
    for_each_combination(others.size(), d, [&](const std::vector<std::size_t>& sel) {
        std::vector<std::size_t> sizes;
        for (auto k : sel) sizes.push_back(cfg.colour(others[k]).size());
        for_each_product(sizes, [&](const std::vector<std::size_t>& choice) {
            for (std::size_t k = 0; k < d; ++k) gens[k] = offset[sel[k]] + choice[k];
            auto inside = indexed.cone_contains(gens, target);
            if (!inside) {
                ++out.degenerate;
            } else {
                out.count += *inside;
            }
            return true;
        });
        return true;
    });
    return out;
}

struct CoreSample {
    std::vector<Point> points;
    std::size_t attempts = 0;
    /// Whether the origin itself was a usable strict core point.
    bool anchored = false;
};

/**
 * Strict-interior core points in general position relative to the
 * configuration.
 *
 * When the origin is usable it is the first sample and later samples are
 * t m with m a random mixture of one colour class (colours taken round-robin)
 * and t in {1/1000, ..., 1}. Otherwise samples are random convex combinations
 * of one random mixture per colour. Up to `samples` points are accepted within
 * 20 * samples attempts; the result may be empty.
 */
inline CoreSample sample_core_points(const ColourfulConfiguration& cfg, std::size_t samples, std::uint64_t seed)
{
    if (samples == 0) throw InputError("need at least one core sample");
    const std::size_t d = cfg.dim();
    const auto all = cfg.all_points();
    const Point origin = Point::origin(d);
    Rng rng(seed);

    auto usable = [&](const Point& p) {
        return core_membership(cfg, p, true) && general_position_relative(p, all);
    };

    CoreSample out;
    out.anchored = usable(origin);
    const std::size_t budget = 20 * samples;
    for (std::size_t a = 0; a < budget && out.points.size() < samples; ++a) {
        ++out.attempts;
        if (out.anchored && a == 0) {
            out.points.push_back(origin);
            continue;
        }
        Point cand(d);
        if (out.anchored) {
            const auto& cls = cfg.colour(a % cfg.colours());
            Point m = convex_combination(cls, rng.convex_weights(cls.size()));
            Rational t(static_cast<long>(rng.uniform(1, 1000)), 1000L);
            t.canonicalize();
            cand = m * t;
        } else {
            std::vector<Point> mixes;
            for (const auto& cls : cfg.classes()) {
                mixes.push_back(convex_combination(cls, rng.convex_weights(cls.size())));
            }
            cand = convex_combination(mixes, rng.convex_weights(mixes.size()));
        }
        if (usable(cand)) out.points.push_back(std::move(cand));
    }
    return out;
}

struct CoreDepthEstimate {
    std::uint64_t estimate = 0;
    Point witness{1};
    std::size_t accepted = 0;
    std::size_t attempts = 0;
    bool anchored = false;
};

/// Upper bound on the minimum colourful depth over the core: the smallest open
/// depth among sample_core_points(cfg, samples, seed).
inline CoreDepthEstimate min_core_depth_estimate(const ColourfulConfiguration& cfg, std::size_t samples,
                                                 std::uint64_t seed)
{
    auto sample = sample_core_points(cfg, samples, seed);
    if (sample.points.empty()) {
        throw EmptyCoreEvidenceError("no strict core point found in " + std::to_string(sample.attempts) +
                                     " sampling attempts");
    }
    CoreDepthEstimate est;
    est.accepted = sample.points.size();
    est.attempts = sample.attempts;
    est.anchored = sample.anchored;
    for (std::size_t i = 0; i < sample.points.size(); ++i) {
        auto depth = colourful_depth(cfg, sample.points[i], Containment::open).count;
        if (i == 0 || depth < est.estimate) {
            est.estimate = depth;
            est.witness = sample.points[i];
        }
    }
    return est;
}

}  // namespace csd
