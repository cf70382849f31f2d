#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "csd/point.hpp"

namespace csd {

/// Seeded generator with platform-independent bounded draws (the standard
/// distributions are implementation-defined, the raw engine is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return lo + static_cast<std::int64_t>(next());
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    /// Integer vector with coordinates uniform in [-bound, bound], excluding 0.
    Point nonzero_integer_point(std::size_t dim, std::int64_t bound)
    {
        while (true) {
            Point p(dim);
            for (std::size_t i = 0; i < dim; ++i) p[i] = Rational(static_cast<long>(uniform(-bound, bound)));
            if (!p.is_zero()) return p;
        }
    }

    /// Positive integer weights in [1, bound], normalized to sum to 1.
    std::vector<Rational> convex_weights(std::size_t n, std::int64_t bound = 1000)
    {
        std::vector<Rational> w(n);
        Rational total = 0;
        for (auto& x : w) {
            x = Rational(static_cast<long>(uniform(1, bound)));
            total += x;
        }
        for (auto& x : w) x /= total;
        return w;
    }

private:
    std::mt19937_64 engine_;
};

inline Point convex_combination(const std::vector<Point>& pts, const std::vector<Rational>& w)
{
    Point out(pts.front().dim());
    for (std::size_t i = 0; i < pts.size(); ++i) out += pts[i] * w[i];
    return out;
}

}  // namespace csd
