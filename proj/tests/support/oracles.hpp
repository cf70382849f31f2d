#pragma once

// Test-only reference implementations. They deliberately share no code path
// with the predicates they check beyond the Rational type and linalg::rank.

#include <algorithm>
#include <optional>
#include <vector>

#include "csd/combinatorics.hpp"
#include "csd/linalg.hpp"
#include "csd/point.hpp"

namespace csd::oracle {

/// All basic feasible solutions of { lambda >= 0, sum lambda = 1, sum lambda_i s_i = p }
/// found by enumerating column subsets whose lifted vectors (s_i, 1) are
/// linearly independent. Each solution is returned as a full-length vector.
inline std::vector<std::vector<Rational>> basic_feasible_solutions(const Point& p,
                                                                   const std::vector<Point>& set)
{
    const std::size_t d = p.dim();
    const std::size_t rows = d + 1;
    std::vector<std::vector<Rational>> out;
    for (std::size_t k = 1; k <= std::min(rows, set.size()); ++k) {
        for_each_combination(set.size(), k, [&](const std::vector<std::size_t>& cols) {
            linalg::Matrix a(rows, k);
            linalg::Matrix aug(rows, k + 1);
            for (std::size_t j = 0; j < k; ++j) {
                for (std::size_t r = 0; r < d; ++r) a(r, j) = set[cols[j]][r];
                a(d, j) = 1;
            }
            for (std::size_t r = 0; r < rows; ++r) {
                for (std::size_t j = 0; j < k; ++j) aug(r, j) = a(r, j);
                aug(r, k) = r < d ? p[r] : Rational(1);
            }
            if (linalg::rank(a) != k || linalg::rank(aug) != k) return true;
            // Pick k independent rows and solve the square system.
            std::vector<std::size_t> chosen;
            for (std::size_t r = 0; r < rows && chosen.size() < k; ++r) {
                linalg::Matrix trial(chosen.size() + 1, k);
                for (std::size_t i = 0; i < chosen.size(); ++i) {
                    for (std::size_t j = 0; j < k; ++j) trial(i, j) = a(chosen[i], j);
                }
                for (std::size_t j = 0; j < k; ++j) trial(chosen.size(), j) = a(r, j);
                if (linalg::rank(trial) == chosen.size() + 1) chosen.push_back(r);
            }
            linalg::Matrix sq(k, k);
            std::vector<Rational> rhs(k);
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j) sq(i, j) = a(chosen[i], j);
                rhs[i] = aug(chosen[i], k);
            }
            auto lam = linalg::solve(sq, rhs);
            if (!lam) return true;
            if (std::any_of(lam->begin(), lam->end(), [](const Rational& x) { return x < 0; })) {
                return true;
            }
            std::vector<Rational> full(set.size(), Rational(0));
            for (std::size_t j = 0; j < k; ++j) full[cols[j]] = (*lam)[j];
            out.push_back(std::move(full));
            return true;
        });
    }
    return out;
}

inline bool hull_feasible(const Point& p, const std::vector<Point>& set)
{
    return !basic_feasible_solutions(p, set).empty();
}

/// Interior membership: the set is full-dimensional and every coordinate is
/// positive in some basic feasible solution (so their average is strictly positive).
inline bool hull_interior(const Point& p, const std::vector<Point>& set)
{
    const std::size_t d = p.dim();
    linalg::Matrix diffs(set.size() - 1 == 0 ? 1 : set.size() - 1, d);
    for (std::size_t i = 1; i < set.size(); ++i) {
        for (std::size_t c = 0; c < d; ++c) diffs(i - 1, c) = set[i][c] - set[0][c];
    }
    if (set.size() < d + 1 || linalg::rank(diffs) < d) return false;
    auto bfs = basic_feasible_solutions(p, set);
    if (bfs.empty()) return false;
    for (std::size_t i = 0; i < set.size(); ++i) {
        bool positive = std::any_of(bfs.begin(), bfs.end(), [i](const auto& l) { return l[i] > 0; });
        if (!positive) return false;
    }
    return true;
}

/// Exact 2x2 cone test by Cramer's rule: v = a x + b y with a, b > 0.
inline bool strictly_in_planar_cone(const Point& x, const Point& y, const Point& v)
{
    Rational det = x[0] * y[1] - x[1] * y[0];
    Rational a = (v[0] * y[1] - v[1] * y[0]) / det;
    Rational b = (x[0] * v[1] - x[1] * v[0]) / det;
    return a > 0 && b > 0;
}

}  // namespace csd::oracle
