#pragma once

#include <cstddef>
#include <vector>

#include "loday/error.hpp"
#include "loday/leibniz_algebra.hpp"
#include "loday/polynomial.hpp"
#include "loday/ratmat.hpp"
#include "loday/structure_field.hpp"
#include "loday/subspace.hpp"
#include "loday/vector_field.hpp"

namespace loday {

/*
 * Canonical pairs and doubles. A pair of Lagrangian subspaces (D, D*) with
 * D + D* = W is canonical when both close under the derived bracket; the
 * adapted canonical coordinates factorize the structure field into the two
 * semi-direct parts of bidegrees (0,1) and (1,0).
 */

/// Exact partition of a degree-+1 field into its four bidegree parts
/// (0,1), (-1,2), (1,0), (2,-1).
struct BidegreeDecomposition {
    VectorField l;        // (0, 1)
    VectorField phi;      // (-1, 2)
    VectorField l_star;   // (1, 0)
    VectorField phi_star; // (2, -1)

    VectorField sum() const { return l + phi + l_star + phi_star; }
};

inline BidegreeDecomposition bidegree_decompose(const VectorField &total) {
    if (!total.is_zero()) {
        const auto d = total.poly_degree();
        if (!d || *d != 1) { throw DegreeError("bidegree_decompose: field must have polynomial degree +1"); }
    }
    const std::size_t n = total.n();
    BidegreeDecomposition out{VectorField(n), VectorField(n), VectorField(n), VectorField(n)};
    for (std::size_t a = 0; a < 2 * n; ++a) {
        for (const auto &[mono, coeff] : total.component(a).terms()) {
            const long dp = static_cast<long>(mono.p_degree()) - (a < n ? 1 : 0);
            const long dq = static_cast<long>(mono.q_degree()) - (a < n ? 0 : 1);
            const Polynomial term = Polynomial::monomial(n, mono.exp, coeff);
            if (dp == 0 && dq == 1) {
                out.l.component(a) += term;
            } else if (dp == -1 && dq == 2) {
                out.phi.component(a) += term;
            } else if (dp == 1 && dq == 0) {
                out.l_star.component(a) += term;
            } else if (dp == 2 && dq == -1) {
                out.phi_star.component(a) += term;
            } else {
                throw DegreeError("bidegree_decompose: term outside the four admissible bidegrees");
            }
        }
    }
    return out;
}

inline BidegreeDecomposition bidegree_decompose(const StructureField &l) {
    return bidegree_decompose(l.field());
}

struct CanonicalPairResult {
    bool leibniz_field = false;
    bool spans = false;
    bool d_lagrangian = false;
    bool dstar_lagrangian = false;
    bool d_closed = false;
    bool dstar_closed = false;

    bool ok() const {
        return leibniz_field && spans && d_lagrangian && dstar_lagrangian && d_closed && dstar_closed;
    }
};

/// Closure of the derived bracket on a subspace.
inline bool closes_under_derived_bracket(const StructureField &l, const Subspace &d) {
    for (const auto &x : d.basis()) {
        for (const auto &y : d.basis()) {
            if (!d.contains(derived_bracket(l, x, y))) { return false; }
        }
    }
    return true;
}

/// (D, D*) is a canonical pair for L when both are Lagrangian Leibniz
/// subalgebras and D + D* = W. Every precondition is reported individually.
inline CanonicalPairResult is_canonical_pair(const StructureField &l, const Subspace &d, const Subspace &dstar) {
    if (l.n() != d.n() || l.n() != dstar.n()) { throw DimensionError("is_canonical_pair: mixed planes"); }
    CanonicalPairResult r;
    r.leibniz_field = is_leibniz_field(l);
    r.spans = spans_plane(d, dstar);
    r.d_lagrangian = is_lagrangian(d);
    r.dstar_lagrangian = is_lagrangian(dstar);
    r.d_closed = closes_under_derived_bracket(l, d);
    r.dstar_closed = closes_under_derived_bracket(l, dstar);
    return r;
}

struct Factorization {
    /// Rows are the barred coordinates expressed in the old ones; symplectic.
    RationalMatrix to_barred;
    /// Bidegree-(0,1) part of the pushed field, the structure of D x| D*.
    StructureField d_part;
    /// Bidegree-(1,0) part, the structure of D* x| D.
    StructureField dstar_part;
    /// The full pushed-forward field, d_part + dstar_part.
    StructureField barred_field;
};

/// Adapted canonical coordinates for a canonical pair: pbar spans D (row
/// reduced, lexicographically first pivots), qbar spans D* adjusted so that
/// {pbar_i, qbar^j} = delta_i^j. The pushed field splits exactly into the
/// (0,1) and (1,0) parts.
inline Factorization factorize(const StructureField &l, const Subspace &d, const Subspace &dstar) {
    const auto pair = is_canonical_pair(l, d, dstar);
    if (!pair.ok()) { throw PreconditionError("factorize: (D, D*) is not a canonical pair"); }
    const std::size_t n = l.n();
    const std::size_t w = 2 * n;

    const RationalMatrix dmat = d.coefficient_matrix().rref().first;
    const RationalMatrix emat = dstar.coefficient_matrix().rref().first;

    // Gram matrix of the Poisson pairing between the two bases
    auto bracket_of_rows = [n](const RationalMatrix &a, std::size_t i, const RationalMatrix &b, std::size_t j) {
        Rational v(0);
        for (std::size_t k = 0; k < n; ++k) {
            v += a.at(i, k) * b.at(j, n + k) - a.at(i, n + k) * b.at(j, k);
        }
        return v;
    };
    RationalMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) { gram.at(i, j) = bracket_of_rows(dmat, i, emat, j); }
    }
    const RationalMatrix ginv = gram.inverse();

    RationalMatrix t(w, w);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t b = 0; b < w; ++b) { t.at(i, b) = dmat.at(i, b); }
    }
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t b = 0; b < w; ++b) {
            Rational v(0);
            for (std::size_t k = 0; k < n; ++k) { v += emat.at(k, b) * ginv.at(k, j); }
            t.at(n + j, b) = v;
        }
    }

    // internal consistency: T must preserve the Poisson matrix
    RationalMatrix jmat(w, w);
    for (std::size_t i = 0; i < n; ++i) {
        jmat.at(i, n + i) = Rational(1);
        jmat.at(n + i, i) = Rational(-1);
    }
    if (t * jmat * t.transpose() != jmat) {
        throw Error("factorize: adapted coordinate change is not symplectic");
    }

    const VectorField pushed = push_forward(l.field(), t);
    const auto parts = bidegree_decompose(pushed);
    if (!parts.phi.is_zero() || !parts.phi_star.is_zero()) {
        throw Error("factorize: pushed field has unexpected mixing components");
    }
    Factorization f;
    f.to_barred = t;
    f.d_part = StructureField(parts.l);
    f.dstar_part = StructureField(parts.l_star);
    f.barred_field = StructureField(pushed);
    return f;
}

/// Splitting data: a symmetric correction s with sigma(p_j) = p_j + s_jk q^k.
struct SplittingData {
    std::size_t n = 0;
    RationalMatrix s;
};

/// The splitting as a Hamiltonian flow: with h = (1/2) s_jk q^j q^k,
/// sigma = 1 + {-,h} (the series stops because {{p,h},h} = 0). Returned as
/// the matrix acting on W coordinates, sigma(w_j) = sum_i M_ij w_i.
inline RationalMatrix splitting_flow(const SplittingData &data) {
    const std::size_t n = data.n;
    if (data.s.rows() != n || data.s.cols() != n) { throw DimensionError("splitting_flow: correction shape mismatch"); }
    if (!data.s.is_symmetric()) { throw PreconditionError("splitting_flow: correction matrix must be symmetric"); }
    Polynomial h(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (data.s.at(j, k).is_zero()) { continue; }
            h += Rational(1, 2) * data.s.at(j, k) *
                 (Polynomial::variable(n, n + j) * Polynomial::variable(n, n + k));
        }
    }
    const auto basis = plane_basis(n);
    RationalMatrix m(2 * n, 2 * n);
    for (std::size_t j = 0; j < 2 * n; ++j) {
        Polynomial image = basis[j];
        Polynomial term = poisson(basis[j], h);
        Rational factor(1);
        unsigned order = 1;
        while (!term.is_zero()) {
            factor = inverse_factorial(order);
            image += factor * term;
            term = poisson(term, h);
            ++order;
            if (order > 4) { throw NilpotencyError("splitting_flow: series did not terminate"); }
        }
        const auto coeffs = linear_coefficients(image);
        for (std::size_t i = 0; i < 2 * n; ++i) { m.at(i, j) = coeffs[i]; }
    }
    return m;
}

/// Killing pairing K_ij = trace(ad_{e_i} ad_{e_j}).
inline RationalMatrix killing_form(const LeibnizAlgebra &a, bool require_lie = true) {
    if (require_lie && !a.is_antisymmetric()) {
        throw PreconditionError("killing_form: bracket is not antisymmetric");
    }
    const std::size_t d = a.dim();
    RationalMatrix k(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Rational trace(0);
            // (ad_i ad_j)^m_m = sum_s C^s_jm C^m_is
            for (std::size_t m = 0; m < d; ++m) {
                for (std::size_t s = 0; s < d; ++s) { trace += a.c(j, m, s) * a.c(i, s, m); }
            }
            k.at(i, j) = trace;
        }
    }
    return k;
}

/// Whether <[x,y],z> = <x,[y,z]> for the pairing K on all basis triples.
inline bool is_invariant_form(const LeibnizAlgebra &a, const RationalMatrix &k) {
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t m = 0; m < d; ++m) {
                Rational lhs(0);
                Rational rhs(0);
                for (std::size_t s = 0; s < d; ++s) {
                    lhs += a.c(i, j, s) * k.at(s, m);
                    rhs += a.c(j, m, s) * k.at(i, s);
                }
                if (lhs != rhs) { return false; }
            }
        }
    }
    return true;
}

/// Double bracket on W for a Lie algebra with an invariant nondegenerate
/// symmetric pairing K: the dual copy carries the isomorphic bracket
/// [K(p1), K(p2)] = K[p1, p2] and the actions [p1, K(p2)] = K[p1, p2],
/// [K(p1), p2] = [p1, p2].
inline Cochain semisimple_double(const LeibnizAlgebra &a, const RationalMatrix &k) {
    const std::size_t d = a.dim();
    if (k.rows() != d || k.cols() != d) { throw DimensionError("semisimple_double: pairing shape mismatch"); }
    if (!a.is_antisymmetric()) { throw PreconditionError("semisimple_double: algebra is not Lie"); }
    if (!k.is_symmetric()) { throw PreconditionError("semisimple_double: pairing is not symmetric"); }
    if (!is_invariant_form(a, k)) { throw PreconditionError("semisimple_double: pairing is not invariant"); }
    if (k.rank() != d) { throw PreconditionError("semisimple_double: pairing is degenerate"); }
    const RationalMatrix kinv = k.inverse();

    // eps^j corresponds to K(f_j) with f_j = sum_m (K^{-1})_{jm} e_m
    Cochain mu(2 * d, 2);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            // [e_i, e_j]
            for (std::size_t s = 0; s < d; ++s) { mu.at({i, j}, s) = a.c(i, j, s); }
            // [e_i, eps^j] = K[e_i, f_j]
            for (std::size_t m = 0; m < d; ++m) {
                if (kinv.at(j, m).is_zero()) { continue; }
                for (std::size_t s = 0; s < d; ++s) {
                    const Rational &c = a.c(i, m, s);
                    if (c.is_zero()) { continue; }
                    for (std::size_t l = 0; l < d; ++l) {
                        mu.at({i, d + j}, d + l) += kinv.at(j, m) * c * k.at(s, l);
                    }
                }
            }
            // [eps^i, e_j] = [f_i, e_j]
            for (std::size_t m = 0; m < d; ++m) {
                if (kinv.at(i, m).is_zero()) { continue; }
                for (std::size_t s = 0; s < d; ++s) {
                    mu.at({d + i, j}, s) += kinv.at(i, m) * a.c(m, j, s);
                }
            }
            // [eps^i, eps^j] = K[f_i, f_j]
            for (std::size_t m = 0; m < d; ++m) {
                if (kinv.at(i, m).is_zero()) { continue; }
                for (std::size_t t = 0; t < d; ++t) {
                    if (kinv.at(j, t).is_zero()) { continue; }
                    for (std::size_t s = 0; s < d; ++s) {
                        const Rational &c = a.c(m, t, s);
                        if (c.is_zero()) { continue; }
                        for (std::size_t l = 0; l < d; ++l) {
                            mu.at({d + i, d + j}, d + l) += kinv.at(i, m) * kinv.at(j, t) * c * k.at(s, l);
                        }
                    }
                }
            }
        }
    }
    return mu;
}

} // namespace loday
