#pragma once

#include <cstddef>
#include <vector>

#include "loday/error.hpp"
#include "loday/polynomial.hpp"
#include "loday/ratmat.hpp"

namespace loday {

/// Linear subspace of W = V + V*, spanned by independent linear functions.
class Subspace {
  public:
    Subspace() = default;

    Subspace(std::size_t n, std::vector<Polynomial> basis)
      : n_(n)
      , basis_(std::move(basis)) {
        for (const auto &b : basis_) {
            if (b.n() != n_) { throw DimensionError("Subspace: basis element on the wrong plane"); }
            if (!is_linear(b) || b.is_zero()) { throw DegreeError("Subspace: basis elements must be nonzero linear"); }
        }
        if (coefficient_matrix().rank() != basis_.size()) {
            throw PreconditionError("Subspace: basis is linearly dependent");
        }
    }

    std::size_t n() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Polynomial> &basis() const { return basis_; }

    /// Rows are the coefficient vectors of the basis over the 2n slots.
    RationalMatrix coefficient_matrix() const {
        RationalMatrix m(basis_.size(), 2 * n_);
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const auto coeffs = linear_coefficients(basis_[i]);
            for (std::size_t j = 0; j < coeffs.size(); ++j) { m.at(i, j) = coeffs[j]; }
        }
        return m;
    }

    /// Membership of a linear polynomial in the span.
    bool contains(const Polynomial &l) const {
        if (l.n() != n_) { throw DimensionError("Subspace: membership test on the wrong plane"); }
        if (!is_linear(l)) { return false; }
        if (l.is_zero()) { return true; }
        RationalMatrix m(basis_.size() + 1, 2 * n_);
        const RationalMatrix base = coefficient_matrix();
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            for (std::size_t j = 0; j < 2 * n_; ++j) { m.at(i, j) = base.at(i, j); }
        }
        const auto coeffs = linear_coefficients(l);
        for (std::size_t j = 0; j < 2 * n_; ++j) { m.at(basis_.size(), j) = coeffs[j]; }
        return m.rank() == basis_.size();
    }

  private:
    std::size_t n_ = 0;
    std::vector<Polynomial> basis_;
};

/// The coordinate subspace V = span(p_1..p_n).
inline Subspace v_subspace(std::size_t n) {
    std::vector<Polynomial> basis;
    for (std::size_t i = 1; i <= n; ++i) { basis.push_back(Polynomial::p(n, i)); }
    return Subspace(n, std::move(basis));
}

/// The coordinate subspace V* = span(q^1..q^n).
inline Subspace v_star_subspace(std::size_t n) {
    std::vector<Polynomial> basis;
    for (std::size_t j = 1; j <= n; ++j) { basis.push_back(Polynomial::q(n, j)); }
    return Subspace(n, std::move(basis));
}

/// Maximally isotropic for the Poisson bracket: dim D = n and all pairwise
/// brackets of basis elements vanish.
inline bool is_lagrangian(const Subspace &d) {
    if (d.dim() != d.n()) { return false; }
    for (std::size_t i = 0; i < d.dim(); ++i) {
        for (std::size_t j = i + 1; j < d.dim(); ++j) {
            if (!poisson(d.basis()[i], d.basis()[j]).is_zero()) { return false; }
        }
    }
    return true;
}

/// Whether D + D* spans the whole of W.
inline bool spans_plane(const Subspace &d, const Subspace &dstar) {
    if (d.n() != dstar.n()) { throw DimensionError("spans_plane: subspaces on different planes"); }
    const std::size_t w = 2 * d.n();
    RationalMatrix m(d.dim() + dstar.dim(), w);
    const RationalMatrix a = d.coefficient_matrix();
    const RationalMatrix b = dstar.coefficient_matrix();
    for (std::size_t i = 0; i < d.dim(); ++i) {
        for (std::size_t j = 0; j < w; ++j) { m.at(i, j) = a.at(i, j); }
    }
    for (std::size_t i = 0; i < dstar.dim(); ++i) {
        for (std::size_t j = 0; j < w; ++j) { m.at(d.dim() + i, j) = b.at(i, j); }
    }
    return m.rank() == w;
}

} // namespace loday
