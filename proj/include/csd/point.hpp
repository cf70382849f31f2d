#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "csd/errors.hpp"
#include "csd/rational.hpp"

namespace csd {

/// Outcome of an orientation test.
enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline Sign to_sign(int s) { return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero); }

inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }

/// A point (or direction) in Q^d with an explicit dimension d >= 1.
class Point {
public:
    explicit Point(std::size_t dim) : coords_(dim)
    {
        if (dim == 0) throw InputError("points must have dimension >= 1");
    }

    explicit Point(std::vector<Rational> coords) : coords_(std::move(coords))
    {
        if (coords_.empty()) throw InputError("points must have dimension >= 1");
    }

    Point(std::initializer_list<Rational> coords) : Point(std::vector<Rational>(coords)) {}

    /// Convenience for integer-valued literals in tests and generators.
    static Point of(std::initializer_list<long> values)
    {
        std::vector<Rational> c;
        c.reserve(values.size());
        for (long v : values) c.emplace_back(v);
        return Point(std::move(c));
    }

    static Point origin(std::size_t dim) { return Point(dim); }

    std::size_t dim() const noexcept { return coords_.size(); }

    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }

    std::span<const Rational> coords() const noexcept { return coords_; }

    bool is_zero() const
    {
        for (const auto& c : coords_) {
            if (c != 0) return false;
        }
        return true;
    }

    Point& operator+=(const Point& o)
    {
        require_same_dim(o);
        for (std::size_t i = 0; i < dim(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }

    Point& operator-=(const Point& o)
    {
        require_same_dim(o);
        for (std::size_t i = 0; i < dim(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }

    Point& operator*=(const Rational& s)
    {
        for (auto& c : coords_) c *= s;
        return *this;
    }

    friend Point operator+(Point a, const Point& b) { return a += b; }
    friend Point operator-(Point a, const Point& b) { return a -= b; }
    friend Point operator*(Point a, const Rational& s) { return a *= s; }
    friend Point operator*(const Rational& s, Point a) { return a *= s; }
    friend Point operator-(Point a)
    {
        for (auto& c : a.coords_) c = -c;
        return a;
    }

    friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }

    /// Lexicographic order on coordinates (used for deduplication only).
    friend bool operator<(const Point& a, const Point& b) { return a.coords_ < b.coords_; }

    friend std::ostream& operator<<(std::ostream& os, const Point& p)
    {
        os << '(';
        for (std::size_t i = 0; i < p.dim(); ++i) {
            if (i) os << ", ";
            os << to_string(p.coords_[i]);
        }
        return os << ')';
    }

    void require_same_dim(const Point& o) const
    {
        if (o.dim() != dim()) {
            throw InputError("dimension mismatch: " + std::to_string(dim()) + " vs " +
                             std::to_string(o.dim()));
        }
    }

private:
    std::vector<Rational> coords_;
};

inline Rational dot(const Point& a, const Point& b)
{
    a.require_same_dim(b);
    Rational s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

/// Throws InputError unless every point has dimension `dim`.
inline void require_dim(std::span<const Point> points, std::size_t dim)
{
    for (const auto& p : points) {
        if (p.dim() != dim) {
            throw InputError("dimension mismatch: expected " + std::to_string(dim) + ", got " +
                             std::to_string(p.dim()));
        }
    }
}

/// Positive rescaling of v to a primitive integer vector with the same direction.
inline Point primitive_direction(const Point& v)
{
    Integer l = 1;
    for (const auto& c : v.coords()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ints;
    ints.reserve(v.dim());
    Integer g = 0;
    for (const auto& c : v.coords()) {
        Integer n = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        ints.push_back(std::move(n));
    }
    Point out(v.dim());
    if (g == 0) return out;
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = Rational(ints[i] / g);
    return out;
}

}  // namespace csd
