#pragma once

/**
 * @file constructions.hpp
 * @brief Generators for the extremal colourful configurations: identical
 * simplices, the shallow S-minus and its S-prime variant, the deep S-plus,
 * regular n-gons, and random configurations with the origin in the core.
 *
 * The sphere constructions use latitude bands on S^{d-1} (last coordinate is
 * the height): the "Capricorn" band at height -c*eps, the "Cancer" band at
 * height eps, and a polar region within eps of the north pole. Points only
 * matter up to positive scaling, so each one is emitted as a rational
 * direction close to its ideal position. Every generator checks its output
 * exactly (general position with the origin, origin strictly in the core,
 * colourful depth at the origin) and retries with a halved tolerance and a
 * seeded jitter when the check fails.
 */

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "csd/configuration.hpp"
#include "csd/depth.hpp"
#include "csd/predicates.hpp"
#include "csd/random.hpp"

namespace csd {

enum class ConstructionKind { identical, s_minus, s_prime, s_plus, ngon, random_core };

inline const char* to_string(ConstructionKind k)
{
    switch (k) {
    case ConstructionKind::identical: return "identical";
    case ConstructionKind::s_minus: return "sminus";
    case ConstructionKind::s_prime: return "sprime";
    case ConstructionKind::s_plus: return "splus";
    case ConstructionKind::ngon: return "ngon";
    case ConstructionKind::random_core: return "random";
    }
    return "?";
}

struct ConstructionSpec {
    ConstructionKind kind = ConstructionKind::s_minus;
    std::size_t dim = 2;
    /// Defaults to 1/(100 d).
    std::optional<Rational> epsilon;
    /// Capricorn sits at height -capricorn_factor * eps.
    Rational capricorn_factor = 2;
    Rational direction_tolerance = dyadic(24);
    std::uint64_t seed = 0;
    unsigned max_retries = 8;

    Rational eps() const
    {
        if (epsilon) return *epsilon;
        Rational e(1L, static_cast<long>(100 * dim));
        e.canonicalize();
        return e;
    }

    void validate() const
    {
        if (dim < 1) throw InputError("construction dimension must be >= 1");
        if (eps() <= 0) throw InputError("epsilon must be positive");
        if (direction_tolerance <= 0) throw InputError("direction tolerance must be positive");
        if (capricorn_factor <= 0) throw InputError("capricorn factor must be positive");
    }
};

struct VerifiedConfiguration {
    ColourfulConfiguration config;
    std::uint64_t claimed_depth_at_origin = 0;
    bool verified = false;
    unsigned retries = 0;
    Rational tolerance_used = 0;
};

namespace geometry {

using Vec = std::vector<long double>;

inline long double norm(const Vec& v)
{
    long double s = 0;
    for (auto x : v) s += x * x;
    return std::sqrt(s);
}

inline Vec normalized(Vec v)
{
    const long double n = norm(v);
    for (auto& x : v) x /= n;
    return v;
}

inline Vec scaled(Vec v, long double s)
{
    for (auto& x : v) x *= s;
    return v;
}

inline Vec with_height(Vec horizontal, long double h)
{
    horizontal.push_back(h);
    return horizontal;
}

/// m+1 unit vectors in R^m forming a regular simplex centred at the origin.
inline std::vector<Vec> regular_simplex_directions(std::size_t m)
{
    if (m == 1) return {{1.0L}, {-1.0L}};
    const std::size_t n = m + 1;
    std::vector<Vec> w(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = (i == j ? 1.0L : 0.0L) - 1.0L / n;
    }
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < m; ++i) {
        Vec v = w[i];
        for (const auto& b : basis) {
            long double dp = 0;
            for (std::size_t j = 0; j < n; ++j) dp += v[j] * b[j];
            for (std::size_t j = 0; j < n; ++j) v[j] -= dp * b[j];
        }
        basis.push_back(normalized(v));
    }
    std::vector<Vec> out(n, Vec(m));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < m; ++k) {
            long double dp = 0;
            for (std::size_t j = 0; j < n; ++j) dp += w[i][j] * basis[k][j];
            out[i][k] = dp;
        }
        out[i] = normalized(out[i]);
    }
    return out;
}

/// Householder reflection taking unit vector a to unit vector b, applied to v.
inline Vec reflect_onto(const Vec& a, const Vec& b, const Vec& v)
{
    Vec w(a.size());
    long double ww = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        w[i] = a[i] - b[i];
        ww += w[i] * w[i];
    }
    if (ww < 1e-30L) return v;
    long double wv = 0;
    for (std::size_t i = 0; i < a.size(); ++i) wv += w[i] * v[i];
    Vec out = v;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= 2 * wv / ww * w[i];
    return out;
}

inline Vec unit_axis(std::size_t m, std::size_t k)
{
    Vec e(m, 0.0L);
    e[k] = 1.0L;
    return e;
}

}  // namespace geometry

namespace detail {

using RealClasses = std::vector<std::vector<geometry::Vec>>;

/// Rounds every coordinate to a multiple of tol; on retries also shifts each
/// coordinate by a seeded random multiple of tol in [-2, 2].
inline ColourfulConfiguration realize(const RealClasses& classes, const Rational& tol, Rng* jitter)
{
    const std::size_t d = classes.front().front().size();
    std::vector<std::vector<Point>> out;
    for (const auto& cls : classes) {
        std::vector<Point> pts;
        for (const auto& v : cls) {
            Point p(d);
            for (std::size_t i = 0; i < d; ++i) {
                p[i] = rationalize(v[i], tol);
                if (jitter) p[i] += tol * Rational(static_cast<long>(jitter->uniform(-2, 2)));
            }
            pts.push_back(std::move(p));
        }
        out.push_back(std::move(pts));
    }
    return ColourfulConfiguration(d, std::move(out));
}

struct Check {
    bool ok = false;
    std::uint64_t depth = 0;
    std::string reason;
};

inline Check check_configuration(const ColourfulConfiguration& cfg, std::uint64_t claim, bool require_gp)
{
    Check c;
    const Point origin = Point::origin(cfg.dim());
    c.depth = colourful_depth(cfg, origin, Containment::open).count;
    if (require_gp) {
        auto pts = cfg.all_points();
        pts.push_back(origin);
        if (!in_general_position(pts)) {
            c.reason = "not in general position";
            return c;
        }
    }
    if (!core_membership(cfg, origin, true)) {
        c.reason = "origin not strictly inside the core";
        return c;
    }
    if (c.depth != claim) {
        c.reason = "depth at origin " + std::to_string(c.depth) + " != claimed " + std::to_string(claim);
        return c;
    }
    c.ok = true;
    return c;
}

/// Build-check-retry loop shared by all sphere constructions.
inline VerifiedConfiguration certify(const std::string& name, const ConstructionSpec& spec, std::uint64_t claim,
                                     const std::function<ColourfulConfiguration(const Rational&, Rng*)>& build,
                                     bool require_gp = true)
{
    Rational tol = spec.direction_tolerance;
    Check last;
    for (unsigned attempt = 0; attempt <= spec.max_retries; ++attempt) {
        Rng jitter(spec.seed + attempt);
        auto cfg = build(tol, attempt == 0 ? nullptr : &jitter);
        last = check_configuration(cfg, claim, require_gp);
        if (last.ok) {
            return VerifiedConfiguration{std::move(cfg), claim, true, attempt, tol};
        }
        tol /= 2;
    }
    throw ConstructionError(name + " (d=" + std::to_string(spec.dim) + ") failed verification after " +
                                std::to_string(spec.max_retries) + " retries: " + last.reason,
                            static_cast<long long>(last.depth));
}

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e)
{
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

inline std::uint64_t factorial(std::uint64_t n)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

/// d = 1: two colours straddling the origin. Every such configuration has depth 2.
inline VerifiedConfiguration line_configuration(const ConstructionSpec& spec, std::uint64_t claim,
                                                const std::string& name)
{
    return certify(name, spec, claim, [](const Rational&, Rng*) {
        return ColourfulConfiguration(1, {{Point::of({-1}), Point::of({2})}, {Point::of({-3}), Point::of({4})}});
    });
}

enum class PolarStyle { shallow, deep };

/// Horizontal unit directions of the first d colours: a regular simplex in
/// R^{d-1}. For d = 2 colour 0 points left and colour 1 right.
inline std::vector<geometry::Vec> colour_directions(std::size_t d)
{
    if (d == 2) return {{-1.0L}, {1.0L}};
    return geometry::regular_simplex_directions(d - 1);
}

/**
 * The first d colours. Colour i has one point on Capricorn in horizontal
 * direction u_i, one on Cancer in direction -u_i, and d-1 polar points.
 * Shallow polar points sit at distance eps from the pole perpendicular to
 * u_i (towards u_i when d = 2). Deep polar points hug the meridian towards
 * the colour's Cancer point, spread perpendicular by `spread * eps`.
 */
inline RealClasses tropical_classes(std::size_t d, long double eps, long double capricorn, long double cancer,
                                    PolarStyle style, long double spread = 0.2L)
{
    using namespace geometry;
    const auto dirs = colour_directions(d);
    RealClasses classes;
    for (std::size_t i = 0; i < d; ++i) {
        const Vec& u = dirs[i];
        std::vector<Vec> pts;
        pts.push_back(with_height(scaled(u, std::sqrt(1 - capricorn * capricorn * eps * eps)), -capricorn * eps));
        pts.push_back(with_height(scaled(u, -std::sqrt(1 - cancer * cancer * eps * eps)), cancer * eps));
        const long double polar_height = std::sqrt(1 - eps * eps);
        if (d == 2) {
            const long double side = style == PolarStyle::shallow ? 1.0L : -1.0L;
            pts.push_back(with_height(scaled(u, side * eps), polar_height));
        } else {
            const Vec e1 = unit_axis(d - 1, 0);
            for (const auto& w : regular_simplex_directions(d - 2)) {
                Vec local(d - 1, 0.0L);
                if (style == PolarStyle::deep) local[0] = -1.0L;
                for (std::size_t k = 0; k < d - 2; ++k) {
                    local[k + 1] = style == PolarStyle::deep ? spread * w[k] : w[k];
                }
                if (style == PolarStyle::shallow) local = normalized(local);
                pts.push_back(with_height(scaled(reflect_onto(e1, u, local), eps), polar_height));
            }
        }
        classes.push_back(std::move(pts));
    }
    return classes;
}

inline long double to_real(const Rational& q) { return static_cast<long double>(q.get_d()); }

}  // namespace detail

/// d+1 copies of the simplex e_1, ..., e_d, -(1, ..., 1); depth (d+1)! at the origin.
/// Picks that repeat a vertex are degenerate, so this one is exempt from the
/// general-position check (only its distinct vertices and the origin are in
/// general position).
inline VerifiedConfiguration gen_identical(std::size_t d)
{
    if (d < 1) throw InputError("dimension must be >= 1");
    std::vector<Point> simplex;
    for (std::size_t i = 0; i < d; ++i) {
        Point e(d);
        e[i] = 1;
        simplex.push_back(std::move(e));
    }
    Point last(d);
    for (std::size_t i = 0; i < d; ++i) last[i] = -1;
    simplex.push_back(std::move(last));
    ConstructionSpec spec;
    spec.dim = d;
    spec.max_retries = 0;
    return detail::certify("identical", spec, detail::factorial(d + 1), [&](const Rational&, Rng*) {
        return ColourfulConfiguration(d, std::vector<std::vector<Point>>(d + 1, simplex));
    }, false);
}

/// The shallow configuration with depth d^2 + 1 at the origin. For d = 2 the
/// explicit planar coordinates are used with square roots rounded to the
/// working tolerance.
inline VerifiedConfiguration gen_sminus(const ConstructionSpec& spec)
{
    spec.validate();
    const std::size_t d = spec.dim;
    const std::uint64_t claim = d * d + 1;
    if (d == 1) return detail::line_configuration(spec, claim, "sminus");
    const Rational eps = spec.eps();
    const Rational c = spec.capricorn_factor;

    if (d == 2) {
        return detail::certify("sminus", spec, claim, [&](const Rational& tol, Rng* jitter) {
            auto pt = [&](int sx, const Rational& sq_arg, const Rational& y) {
                Point p{approx_sqrt(sq_arg, tol) * sx, y};
                if (jitter) {
                    for (std::size_t k = 0; k < 2; ++k) p[k] += tol * Rational(static_cast<long>(jitter->uniform(-2, 2)));
                }
                return p;
            };
            const Rational e2 = eps * eps;
            const Rational cap = c * eps;
            std::vector<Point> x{pt(-1, 1 - cap * cap, -cap), pt(1, 1 - e2, eps), Point{-eps, approx_sqrt(1 - e2, tol)}};
            std::vector<Point> y{pt(1, 1 - cap * cap, -cap), pt(-1, 1 - e2, eps), Point{eps, approx_sqrt(1 - e2, tol)}};
            std::vector<Point> z{pt(-1, 1 - 16 * e2, -4 * eps), pt(-1, 1 - 9 * e2, 3 * eps), pt(1, 1 - 9 * e2, 3 * eps)};
            return ColourfulConfiguration(2, {x, y, z});
        });
    }

    using namespace geometry;
    const long double e = detail::to_real(eps);
    auto classes = detail::tropical_classes(d, e, detail::to_real(c), 1.0L, detail::PolarStyle::shallow);
    // Last colour: one antipode in the deep-enough cell reached by the staircase
    // of facet crossings (direction sum (i+1) u_i, height 12 eps), the others
    // a regular simplex well inside the southern cap (height -8 eps) with one
    // vertex straight below the first antipode's meridian.
    const auto dirs = detail::colour_directions(d);
    Vec q(d - 1, 0.0L);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d - 1; ++k) q[k] += static_cast<long double>(i + 1) * dirs[i][k];
    }
    q = normalized(q);
    std::vector<Vec> last;
    last.push_back(scaled(with_height(q, 12 * e), -1.0L));
    const auto ring = regular_simplex_directions(d - 1);
    for (const auto& w : ring) {
        last.push_back(scaled(with_height(reflect_onto(ring[0], scaled(q, -1.0L), w), -8 * e), -1.0L));
    }
    classes.push_back(std::move(last));
    return detail::certify("sminus", spec, claim,
                           [&](const Rational& tol, Rng* jitter) { return detail::realize(classes, tol, jitter); });
}

/**
 * Variant with depth d^2 + 1: d antipodes of the last colour each cross a
 * single facet of the southern cone just above the equator (d cones each),
 * the last antipode sits at the south pole (one cone). The tropics are moved
 * north to heights -3/2 eps and eps, which keeps Capricorn below the
 * reflected Cancer band so the origin stays inside every colour hull.
 */
inline VerifiedConfiguration gen_sprime(const ConstructionSpec& spec)
{
    spec.validate();
    const std::size_t d = spec.dim;
    const std::uint64_t claim = d * d + 1;
    if (d == 1) return detail::line_configuration(spec, claim, "sprime");
    using namespace geometry;
    const long double e = detail::to_real(spec.eps());
    auto classes = detail::tropical_classes(d, e, 1.5L, 1.0L, detail::PolarStyle::shallow);
    const auto dirs = detail::colour_directions(d);
    std::vector<Vec> last;
    for (std::size_t j = 0; j < d; ++j) {
        last.push_back(scaled(with_height(scaled(dirs[j], -1.0L), 0.5L * e), -1.0L));
    }
    last.push_back(with_height(Vec(d - 1, 0.0L), 1.0L));
    classes.push_back(std::move(last));
    return detail::certify("sprime", spec, claim,
                           [&](const Rational& tol, Rng* jitter) { return detail::realize(classes, tol, jitter); });
}

/**
 * Deep configuration with depth d * d^d + 1: polar points hug the meridian
 * towards their colour's Cancer point so the cell around the north pole is
 * covered by all d^d cones drawn from Cancer and the polar region. d antipodes
 * of the last colour go in that cell, the last one at the south pole.
 */
inline VerifiedConfiguration gen_splus(const ConstructionSpec& spec)
{
    spec.validate();
    const std::size_t d = spec.dim;
    const std::uint64_t claim = d * detail::ipow(d, d) + 1;
    if (d == 1) return detail::line_configuration(spec, claim, "splus");
    using namespace geometry;
    const long double e = detail::to_real(spec.eps());
    auto classes = detail::tropical_classes(d, e, detail::to_real(spec.capricorn_factor), 1.0L,
                                            detail::PolarStyle::deep, 0.2L);
    std::vector<Vec> last;
    for (const auto& w : regular_simplex_directions(d - 1)) {
        last.push_back(scaled(with_height(scaled(w, e / 20), 1.0L), -1.0L));
    }
    last.push_back(with_height(Vec(d - 1, 0.0L), 1.0L));
    classes.push_back(std::move(last));
    return detail::certify("splus", spec, claim,
                           [&](const Rational& tol, Rng* jitter) { return detail::realize(classes, tol, jitter); });
}

struct NgonResult {
    std::vector<Point> points;
    /// (n^3 - n) / 24, the depth of the centre.
    std::uint64_t claimed_depth_at_centre = 0;
    Rational tolerance_used = 0;
};

/// Rational approximations of the vertices of a regular n-gon (n odd) around
/// the origin, in general position together with the origin.
inline NgonResult gen_regular_ngon(std::size_t n, const Rational& tolerance = dyadic(24), std::uint64_t seed = 0)
{
    if (n < 3) throw InputError("a regular n-gon needs n >= 3");
    if (n % 2 == 0) {
        throw InputError("even n puts opposite vertices on a line through the centre; use odd n");
    }
    const long double two_pi = 2.0L * 3.14159265358979323846264338327950288L;
    Rational tol = tolerance;
    for (unsigned attempt = 0; attempt <= 8; ++attempt) {
        Rng jitter(seed + attempt);
        std::vector<Point> pts;
        for (std::size_t k = 0; k < n; ++k) {
            const long double a = two_pi * static_cast<long double>(k) / static_cast<long double>(n);
            Point p{rationalize(std::cos(a), tol), rationalize(std::sin(a), tol)};
            if (attempt > 0) {
                for (std::size_t i = 0; i < 2; ++i) p[i] += tol * Rational(static_cast<long>(jitter.uniform(-2, 2)));
            }
            pts.push_back(std::move(p));
        }
        auto with_origin = pts;
        with_origin.push_back(Point::origin(2));
        if (in_general_position(with_origin)) {
            return NgonResult{std::move(pts), (n * n * n - n) / 24, tol};
        }
        tol /= 2;
    }
    throw ConstructionError("regular n-gon could not be put in general position", 0);
}

/**
 * Random configuration with `points_per_colour` integer points per colour in
 * [-bound, bound]^d, the origin strictly inside every colour hull, and all
 * points plus the origin in general position. Colours are rejection-sampled
 * independently. The claimed depth is the computed one.
 */
inline VerifiedConfiguration gen_random_core_config(std::size_t d, std::size_t points_per_colour, std::uint64_t seed,
                                                    std::int64_t bound = 10000, std::size_t colours = 0)
{
    if (d < 1) throw InputError("dimension must be >= 1");
    if (points_per_colour < d + 1) throw InputError("need at least d+1 points per colour");
    if (colours == 0) colours = d + 1;
    Rng rng(seed);
    const Point origin = Point::origin(d);
    for (int round = 0; round < 100; ++round) {
        std::vector<std::vector<Point>> classes;
        for (std::size_t c = 0; c < colours; ++c) {
            bool found = false;
            for (int tries = 0; tries < 10000 && !found; ++tries) {
                std::vector<Point> pts;
                for (std::size_t i = 0; i < points_per_colour; ++i) pts.push_back(rng.nonzero_integer_point(d, bound));
                if (in_convex_hull(origin, pts, true)) {
                    classes.push_back(std::move(pts));
                    found = true;
                }
            }
            if (!found) throw ConstructionError("random core configuration: colour rejection budget exhausted", 0);
        }
        ColourfulConfiguration cfg(d, std::move(classes));
        auto all = cfg.all_points();
        all.push_back(origin);
        if (!in_general_position(all)) continue;
        auto depth = colourful_depth(cfg, origin, Containment::open).count;
        return VerifiedConfiguration{std::move(cfg), depth, true, static_cast<unsigned>(round), 0};
    }
    throw ConstructionError("random core configuration: general-position budget exhausted", 0);
}

/// Dispatch for the configuration-valued kinds (not ngon).
inline VerifiedConfiguration generate(const ConstructionSpec& spec, std::size_t points_per_colour = 0)
{
    switch (spec.kind) {
    case ConstructionKind::identical: return gen_identical(spec.dim);
    case ConstructionKind::s_minus: return gen_sminus(spec);
    case ConstructionKind::s_prime: return gen_sprime(spec);
    case ConstructionKind::s_plus: return gen_splus(spec);
    case ConstructionKind::random_core:
        return gen_random_core_config(spec.dim, points_per_colour ? points_per_colour : spec.dim + 1, spec.seed);
    case ConstructionKind::ngon: break;
    }
    throw InputError("ngon produces a point set, not a colourful configuration");
}

}  // namespace csd
