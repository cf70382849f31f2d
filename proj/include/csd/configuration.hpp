#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "csd/point.hpp"

namespace csd {

/// Colour classes S_1, ..., S_r of points in Q^d.
class ColourfulConfiguration {
public:
    ColourfulConfiguration(std::size_t dim, std::vector<std::vector<Point>> classes)
        : dim_(dim), classes_(std::move(classes))
    {
        if (dim_ == 0) throw InputError("configuration dimension must be >= 1");
        if (classes_.empty()) throw InputError("configuration needs at least one colour class");
        for (std::size_t c = 0; c < classes_.size(); ++c) {
            if (classes_[c].empty()) {
                throw InputError("colour class " + std::to_string(c) + " is empty");
            }
            require_dim(classes_[c], dim_);
        }
    }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t colours() const noexcept { return classes_.size(); }

    const std::vector<Point>& colour(std::size_t c) const
    {
        check_colour(c);
        return classes_[c];
    }

    const Point& point(std::size_t c, std::size_t i) const
    {
        check_colour(c);
        if (i >= classes_[c].size()) {
            throw InputError("point index " + std::to_string(i) + " out of range for colour " +
                             std::to_string(c));
        }
        return classes_[c][i];
    }

    const std::vector<std::vector<Point>>& classes() const noexcept { return classes_; }

    std::vector<std::size_t> sizes() const
    {
        std::vector<std::size_t> s;
        s.reserve(classes_.size());
        for (const auto& c : classes_) s.push_back(c.size());
        return s;
    }

    std::size_t total_points() const
    {
        std::size_t n = 0;
        for (const auto& c : classes_) n += c.size();
        return n;
    }

    /// All points, colour by colour.
    std::vector<Point> all_points() const
    {
        std::vector<Point> out;
        out.reserve(total_points());
        for (const auto& c : classes_) out.insert(out.end(), c.begin(), c.end());
        return out;
    }

    /// Same configuration translated by -p, so p becomes the origin.
    ColourfulConfiguration centred_at(const Point& p) const
    {
        if (p.dim() != dim_) throw InputError("query point dimension mismatch");
        auto moved = classes_;
        for (auto& cls : moved) {
            for (auto& q : cls) q -= p;
        }
        return ColourfulConfiguration(dim_, std::move(moved));
    }

    friend bool operator==(const ColourfulConfiguration&, const ColourfulConfiguration&) = default;

    void check_colour(std::size_t c) const
    {
        if (c >= classes_.size()) {
            throw InputError("colour index " + std::to_string(c) + " out of range");
        }
    }

private:
    std::size_t dim_;
    std::vector<std::vector<Point>> classes_;
};

}  // namespace csd
