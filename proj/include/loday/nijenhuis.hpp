#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "loday/cochain.hpp"
#include "loday/error.hpp"
#include "loday/polynomial.hpp"
#include "loday/ratmat.hpp"
#include "loday/structure_field.hpp"
#include "loday/vector_field.hpp"

namespace loday {

/*
 * Nijenhuis operators and complex structures. An operator is an arity-1
 * cochain on W; the field-level statements additionally require it to be
 * Hamiltonian (an element of sp(2n)), witnessed by a quadratic generator
 * h = (1/2) r^{ij} p_i p_j + n^i_j p_i q^j + (1/2) o_ij q^i q^j.
 */
class LinearOperator {
  public:
    LinearOperator() = default;

    /// Operator from its matrix, N(w_j) = sum_i M_ij w_i.
    LinearOperator(std::size_t n, RationalMatrix m)
      : n_(n)
      , m_(std::move(m)) {
        if (m_.rows() != 2 * n_ || m_.cols() != 2 * n_) {
            throw DimensionError("LinearOperator: matrix shape mismatch");
        }
    }

    /// Operator from a matrix together with its claimed Hamiltonian
    /// generator; the two must describe the same linear map.
    LinearOperator(std::size_t n, RationalMatrix m, Polynomial generator)
      : LinearOperator(n, std::move(m)) {
        if (!generator.is_zero() && !generator.is_homogeneous_of_total_degree(2)) {
            throw PreconditionError("LinearOperator: generator must be quadratic");
        }
        if (from_generator(generator).m_ != m_) {
            throw PreconditionError("LinearOperator: generator does not match the matrix");
        }
        generator_ = std::move(generator);
    }

    static LinearOperator identity(std::size_t n) {
        return LinearOperator(n, RationalMatrix::identity(2 * n));
    }

    static LinearOperator from_generator(const Polynomial &h) {
        if (!h.is_zero() && !h.is_homogeneous_of_total_degree(2)) {
            throw PreconditionError("LinearOperator: generator must be quadratic");
        }
        const std::size_t n = h.n();
        const VectorField field = hamiltonian(h);
        RationalMatrix m(2 * n, 2 * n);
        for (std::size_t j = 0; j < 2 * n; ++j) {
            if (field.component(j).is_zero()) { continue; }
            const auto coeffs = linear_coefficients(field.component(j));
            for (std::size_t i = 0; i < 2 * n; ++i) { m.at(i, j) = coeffs[i]; }
        }
        LinearOperator op(n, std::move(m));
        op.generator_ = h;
        return op;
    }

    static LinearOperator from_cochain(const Cochain &c) {
        if (c.arity() != 1) { throw ArityError("LinearOperator: expected an arity-1 cochain"); }
        if (c.dim() % 2 != 0) { throw DimensionError("LinearOperator: cochain dimension must be even"); }
        const std::size_t n = c.dim() / 2;
        RationalMatrix m(2 * n, 2 * n);
        for (std::size_t j = 0; j < 2 * n; ++j) {
            for (std::size_t i = 0; i < 2 * n; ++i) { m.at(i, j) = c.at({j}, i); }
        }
        return LinearOperator(n, std::move(m));
    }

    std::size_t n() const { return n_; }
    const RationalMatrix &matrix() const { return m_; }
    const std::optional<Polynomial> &generator() const { return generator_; }

    Cochain as_cochain() const {
        Cochain c(2 * n_, 1);
        for (std::size_t j = 0; j < 2 * n_; ++j) {
            for (std::size_t i = 0; i < 2 * n_; ++i) { c.at({j}, i) = m_.at(i, j); }
        }
        return c;
    }

    /// The operator as a degree-0 vector field.
    VectorField as_field() const {
        VectorField x(n_);
        for (std::size_t j = 0; j < 2 * n_; ++j) {
            Polynomial comp(n_);
            for (std::size_t i = 0; i < 2 * n_; ++i) {
                if (!m_.at(i, j).is_zero()) { comp += m_.at(i, j) * Polynomial::variable(n_, i); }
            }
            x.component(j) = comp;
        }
        return x;
    }

    LinearOperator compose(const LinearOperator &o) const {
        if (n_ != o.n_) { throw DimensionError("LinearOperator: composition on different planes"); }
        return LinearOperator(n_, m_ * o.m_);
    }

    bool is_minus_identity() const { return m_ == -RationalMatrix::identity(2 * n_); }

    friend bool operator==(const LinearOperator &a, const LinearOperator &b) {
        return a.n_ == b.n_ && a.m_ == b.m_;
    }

  private:
    std::size_t n_ = 0;
    RationalMatrix m_;
    std::optional<Polynomial> generator_;
};

/// Torsion Tor_N(x, y) = [Nx, Ny] - N[Nx, y] - N[x, Ny] + N^2 [x, y],
/// expanded directly in coordinates (independent of the graded bracket).
inline Cochain torsion(const Cochain &mu, const LinearOperator &nop) {
    if (mu.arity() != 2) { throw ArityError("torsion: expected an arity-2 cochain"); }
    const std::size_t w = mu.dim();
    if (w != 2 * nop.n()) { throw DimensionError("torsion: operator and bracket dimensions differ"); }
    const RationalMatrix &nm = nop.matrix();
    Cochain tor(w, 2);
    for (std::size_t i = 0; i < w; ++i) {
        for (std::size_t j = 0; j < w; ++j) {
            for (std::size_t l = 0; l < w; ++l) {
                Rational v(0);
                for (std::size_t a = 0; a < w; ++a) {
                    if (nm.at(a, i).is_zero()) { continue; }
                    for (std::size_t b = 0; b < w; ++b) {
                        if (nm.at(b, j).is_zero()) { continue; }
                        v += nm.at(a, i) * nm.at(b, j) * mu.at({a, b}, l);
                    }
                }
                for (std::size_t a = 0; a < w; ++a) {
                    if (nm.at(a, i).is_zero()) { continue; }
                    for (std::size_t s = 0; s < w; ++s) {
                        if (mu.at({a, j}, s).is_zero()) { continue; }
                        v -= nm.at(a, i) * mu.at({a, j}, s) * nm.at(l, s);
                    }
                }
                for (std::size_t b = 0; b < w; ++b) {
                    if (nm.at(b, j).is_zero()) { continue; }
                    for (std::size_t s = 0; s < w; ++s) {
                        if (mu.at({i, b}, s).is_zero()) { continue; }
                        v -= nm.at(b, j) * mu.at({i, b}, s) * nm.at(l, s);
                    }
                }
                for (std::size_t s = 0; s < w; ++s) {
                    if (mu.at({i, j}, s).is_zero()) { continue; }
                    for (std::size_t t = 0; t < w; ++t) {
                        v += mu.at({i, j}, s) * nm.at(t, s) * nm.at(l, t);
                    }
                }
                tor.at({i, j}, l) = v;
            }
        }
    }
    return tor;
}

struct FncResult {
    bool holds = false;
    Cochain lhs; // (1/2)[[ [[mu,N]], N]] - Tor_N
    Cochain rhs; // (1/2)[[mu, N^2]]
};

/// The formal identity (1/2)[[[[mu,N]],N]] - Tor_N = (1/2)[[mu, N^2]],
/// valid for every binary cochain and operator.
inline FncResult fnc_check(const Cochain &mu, const LinearOperator &nop) {
    const Cochain nc = nop.as_cochain();
    const Cochain nn = nop.compose(nop).as_cochain();
    FncResult r;
    r.lhs = Rational(1, 2) * graded_bracket(graded_bracket(mu, nc), nc) - torsion(mu, nop);
    r.rhs = Rational(1, 2) * graded_bracket(mu, nn);
    r.holds = (r.lhs == r.rhs);
    return r;
}

struct ComplexStructureResult {
    bool squares_to_minus_one = false;
    bool torsion_free = false;
    /// [[[[mu,N]],N]] == -mu; meaningful (and implied) when both above hold.
    bool double_bracket_is_minus_mu = false;

    bool ok() const { return squares_to_minus_one && torsion_free; }
};

/// N is a complex structure when N^2 = -1 and Tor_N = 0.
inline ComplexStructureResult is_complex_structure(const Cochain &mu, const LinearOperator &nop) {
    ComplexStructureResult r;
    r.squares_to_minus_one = nop.compose(nop).is_minus_identity();
    r.torsion_free = torsion(mu, nop).is_zero();
    const Cochain nc = nop.as_cochain();
    r.double_bracket_is_minus_mu = (graded_bracket(graded_bracket(mu, nc), nc) == -mu);
    return r;
}

/// One-parameter deformation mu_t = mu + t [[mu, N]]. Requires mu to be a
/// Leibniz bracket and [[mu, N]] to be one as well (the flatness condition);
/// then mu_t is Maurer-Cartan for every t.
inline Cochain deform(const Cochain &mu, const LinearOperator &nop, const Rational &t) {
    if (!is_maurer_cartan(mu).ok) { throw PreconditionError("deform: mu is not a Leibniz bracket"); }
    const Cochain bracket = graded_bracket(mu, nop.as_cochain());
    if (!is_maurer_cartan(bracket).ok) {
        throw PreconditionError("deform: [[mu, N]] is not a Leibniz bracket (deformation is not flat)");
    }
    return mu + t * bracket;
}

/// Field-level deformation: for Hamiltonian N with Tor_N(psi_L) = 0, the
/// commutator [L, N] is again a Leibniz vector field.
inline StructureField nijenhuis_field_check(const StructureField &l, const LinearOperator &nop) {
    if (l.n() != nop.n()) { throw DimensionError("nijenhuis_field_check: operands on different planes"); }
    if (!nop.generator()) {
        throw PreconditionError("nijenhuis_field_check: operator has no Hamiltonian generator");
    }
    if (!torsion(psi(l), nop).is_zero()) {
        throw PreconditionError("nijenhuis_field_check: operator has nonvanishing torsion");
    }
    return StructureField(commutator(l.field(), nop.as_field()));
}

} // namespace loday
