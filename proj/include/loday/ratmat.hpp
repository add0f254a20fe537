#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "loday/error.hpp"
#include "loday/rational.hpp"

namespace loday {

/// Dense matrix of rationals. Only the handful of exact-arithmetic routines
/// the library needs: products, row reduction with lexicographically first
/// pivots, rank and inversion.
class RationalMatrix {
  public:
    RationalMatrix() = default;

    RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows)
      , cols_(cols)
      , a_(rows * cols) {}

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) { m.at(i, i) = Rational(1); }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational &at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational &at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RationalMatrix transpose() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) { t.at(j, i) = at(i, j); }
        }
        return t;
    }

    bool is_zero() const {
        for (const auto &x : a_) {
            if (!x.is_zero()) { return false; }
        }
        return true;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) { return false; }
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = i + 1; j < cols_; ++j) {
                if (at(i, j) != at(j, i)) { return false; }
            }
        }
        return true;
    }

    friend RationalMatrix operator*(const RationalMatrix &a, const RationalMatrix &b) {
        if (a.cols_ != b.rows_) { throw DimensionError("RationalMatrix: product shape mismatch"); }
        RationalMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a.at(i, k).is_zero()) { continue; }
                for (std::size_t j = 0; j < b.cols_; ++j) { c.at(i, j) += a.at(i, k) * b.at(k, j); }
            }
        }
        return c;
    }

    friend RationalMatrix operator+(const RationalMatrix &a, const RationalMatrix &b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
            throw DimensionError("RationalMatrix: sum shape mismatch");
        }
        RationalMatrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) { c.a_[i] += b.a_[i]; }
        return c;
    }

    friend RationalMatrix operator-(const RationalMatrix &a, const RationalMatrix &b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
            throw DimensionError("RationalMatrix: difference shape mismatch");
        }
        RationalMatrix c = a;
        for (std::size_t i = 0; i < c.a_.size(); ++i) { c.a_[i] -= b.a_[i]; }
        return c;
    }

    friend RationalMatrix operator*(const Rational &s, RationalMatrix m) {
        for (auto &x : m.a_) { x *= s; }
        return m;
    }

    RationalMatrix operator-() const { return Rational(-1) * (*this); }

    friend bool operator==(const RationalMatrix &a, const RationalMatrix &b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const RationalMatrix &a, const RationalMatrix &b) { return !(a == b); }

    /// Reduced row echelon form; pivot columns come out in increasing order
    /// (the first usable column is always chosen).
    std::pair<RationalMatrix, std::vector<std::size_t>> rref() const {
        RationalMatrix m = *this;
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t pivot = row;
            while (pivot < rows_ && m.at(pivot, col).is_zero()) { ++pivot; }
            if (pivot == rows_) { continue; }
            if (pivot != row) {
                for (std::size_t j = 0; j < cols_; ++j) { std::swap(m.at(pivot, j), m.at(row, j)); }
            }
            const Rational inv = Rational(1) / m.at(row, col);
            for (std::size_t j = 0; j < cols_; ++j) { m.at(row, j) *= inv; }
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row || m.at(i, col).is_zero()) { continue; }
                const Rational factor = m.at(i, col);
                for (std::size_t j = 0; j < cols_; ++j) { m.at(i, j) -= factor * m.at(row, j); }
            }
            pivots.push_back(col);
            ++row;
        }
        return {std::move(m), std::move(pivots)};
    }

    std::size_t rank() const { return rref().second.size(); }

    RationalMatrix inverse() const {
        if (rows_ != cols_) { throw DimensionError("RationalMatrix: only square matrices invert"); }
        RationalMatrix aug(rows_, 2 * cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) { aug.at(i, j) = at(i, j); }
            aug.at(i, cols_ + i) = Rational(1);
        }
        auto [red, pivots] = aug.rref();
        if (pivots.size() < rows_ || pivots[rows_ - 1] >= cols_) {
            throw NotRepresentableError("RationalMatrix: singular matrix has no inverse");
        }
        RationalMatrix inv(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) { inv.at(i, j) = red.at(i, cols_ + j); }
        }
        return inv;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

} // namespace loday
