#pragma once

// Small dense exact linear algebra over Q. Matrices here are at most
// (d+1) x (d+1) for desk-scale d, so plain Gaussian elimination is enough.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "csd/rational.hpp"

namespace csd::linalg {

/// Row-major square or rectangular matrix.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

namespace detail {

/// Bareiss on 128-bit integers, in place on an n x n row-major buffer;
/// nullopt when an intermediate overflows.
inline std::optional<__int128> small_bareiss(__int128* a, std::size_t n)
{
    auto at = [&](std::size_t r, std::size_t c) -> __int128& { return a[r * n + c]; };
    __int128 prev = 1;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                __int128 x, y, t;
                if (__builtin_mul_overflow(at(i, j), at(k, k), &x) || __builtin_mul_overflow(at(i, k), at(k, j), &y) ||
                    __builtin_sub_overflow(x, y, &t)) {
                    return std::nullopt;
                }
                at(i, j) = t / prev;
            }
        }
        prev = at(k, k);
    }
    return negate ? -at(n - 1, n - 1) : at(n - 1, n - 1);
}

inline Integer to_integer(__int128 v)
{
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Integer hi(static_cast<unsigned long>(u >> 64));
    Integer out = (hi << 64) + Integer(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    return neg ? Integer(-out) : out;
}

}  // namespace detail

/// Fraction-free (Bareiss) elimination on integer rows. Each row is first
/// scaled by the lcm of its denominators.
inline Rational determinant(const Matrix& m)
{
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<Integer> a(n * n);
    Integer scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        scale *= l;
        for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    if (std::all_of(a.begin(), a.end(), [](const Integer& x) { return x.fits_slong_p(); })) {
        std::vector<__int128> small(n * n);
        for (std::size_t i = 0; i < n * n; ++i) small[i] = a[i].get_si();
        if (auto det = detail::small_bareiss(small.data(), n)) {
            Rational out(detail::to_integer(*det), scale);
            out.canonicalize();
            return out;
        }
    }
    auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };
    Integer prev = 1;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = at(k, k);
    }
    Rational det(at(n - 1, n - 1), scale);
    det.canonicalize();
    return negate ? Rational(-det) : det;
}

inline int determinant_sign(const Matrix& m) { return sgn(determinant(m)); }

/// Solves A x = b for square nonsingular A; nullopt when A is singular.
inline std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b)
{
    const std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        a.swap_rows(pivot, col);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            Rational f = a(r, col) / a(col, col);
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
            b[r] -= f * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= a(i, i);
    return b;
}

/// Rank by row reduction.
inline std::size_t rank(Matrix m)
{
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(pivot, r);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, col) == 0) continue;
            Rational f = m(i, col) / m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) m(i, c) -= f * m(r, c);
        }
        ++r;
    }
    return r;
}

}  // namespace csd::linalg
