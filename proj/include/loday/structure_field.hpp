#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "loday/cochain.hpp"
#include "loday/error.hpp"
#include "loday/forms.hpp"
#include "loday/leibniz_algebra.hpp"
#include "loday/multivector.hpp"
#include "loday/polynomial.hpp"
#include "loday/vector_field.hpp"

namespace loday {

/*
 * The derived-bracket machinery. A vector field of polynomial degree +1 maps
 * linear functions to quadratics, i.e. it is a map from W = V + V* into
 * sp(2n). Through the higher derived brackets psi it induces a binary
 * cochain on W; the field is cohomological when that cochain is
 * Maurer-Cartan (equivalently, when the derived bracket
 * [l1, l2] = {L(l1), l2} satisfies the Leibniz identity), and Leibniz when
 * it is in addition anti-cyclic. Basis convention throughout: algebra basis
 * e_i corresponds to p_i and the dual basis to q^i; every pairing is
 * computed through the Poisson bracket.
 */

/// The 2n coordinate functions as linear polynomials.
inline std::vector<Polynomial> plane_basis(std::size_t n) {
    std::vector<Polynomial> basis;
    basis.reserve(2 * n);
    for (std::size_t a = 0; a < 2 * n; ++a) { basis.push_back(Polynomial::variable(n, a)); }
    return basis;
}

/// Anti-symmetric pairing of linear functions, (l1, l2)_- = {l1, l2}.
inline Rational pairing_minus(const Polynomial &l1, const Polynomial &l2) {
    if (!is_linear(l1) || !is_linear(l2)) { throw DegreeError("pairing_minus: arguments must be linear"); }
    return poisson(l1, l2).constant_value();
}

/// Higher derived bracket of a homogeneous field of polynomial degree m:
/// the arity-(m+1) cochain {...{{X(l_1), l_2}, l_3}, ..., l_{m+1}} on W.
/// For m = 0 this is X itself as a linear map.
inline Cochain psi_with_degree(const VectorField &x, long degree, std::size_t cap = kDefaultArityCap) {
    if (degree < 0) { throw DegreeError("psi: polynomial degree must be non-negative"); }
    if (!x.is_zero()) {
        const auto d = x.poly_degree();
        if (!d) { throw DegreeError("psi: field is not homogeneous"); }
        if (*d != degree) { throw DegreeError("psi: field degree does not match the requested degree"); }
    }
    const std::size_t n = x.n();
    const std::size_t w = 2 * n;
    const std::size_t arity = static_cast<std::size_t>(degree) + 1;
    Cochain result(w, arity, cap);
    const auto basis = plane_basis(n);
    std::vector<std::size_t> tuple(arity, 0);
    while (true) {
        Polynomial g = x.apply(basis[tuple[0]]);
        for (std::size_t j = 1; j < arity && !g.is_zero(); ++j) { g = poisson(g, basis[tuple[j]]); }
        if (!g.is_zero()) {
            const auto coeffs = linear_coefficients(g);
            for (std::size_t k = 0; k < w; ++k) { result.at(tuple, k) = coeffs[k]; }
        }
        if (!result.advance(tuple)) { break; }
    }
    return result;
}

/// psi with the degree inferred from the field; the zero field is taken as
/// degree 0 (an arity-1 zero cochain).
inline Cochain psi(const VectorField &x, std::size_t cap = kDefaultArityCap) {
    if (x.is_zero()) { return Cochain(2 * x.n(), 1, cap); }
    const auto d = x.poly_degree();
    if (!d) { throw DegreeError("psi: field is not homogeneous"); }
    return psi_with_degree(x, *d, cap);
}

struct AnticyclicResult {
    bool ok = true;
    std::vector<std::size_t> witness; // basis tuple of the first failure
    Rational defect;                  // value of the signed cyclic sum there
};

/// Signed cyclic-sum condition for a homogeneous field of degree m: over the
/// m+2 cyclic shifts tau of the argument tuple, with sgn(tau) the signature
/// of the shift as a permutation,
///   sum_tau sgn(tau) {...{X(l_tau(1)), l_tau(2)}, ..., l_tau(m+2)} = 0.
/// The shift by s on m+2 letters has signature (-1)^{s(m+1)}.
inline AnticyclicResult check_anticyclic(const VectorField &x, long degree) {
    if (degree < 0) { throw DegreeError("check_anticyclic: polynomial degree must be non-negative"); }
    const std::size_t n = x.n();
    const std::size_t w = 2 * n;
    const std::size_t args = static_cast<std::size_t>(degree) + 2;
    const auto basis = plane_basis(n);
    const bool alternating = (degree % 2 == 0); // (-1)^{s(m+1)} is nontrivial iff m is even

    auto nested = [&](const std::vector<std::size_t> &t, std::size_t shift) {
        Polynomial g = x.apply(basis[t[shift % args]]);
        for (std::size_t j = 1; j < args && !g.is_zero(); ++j) {
            g = poisson(g, basis[t[(shift + j) % args]]);
        }
        return g.is_zero() ? Rational(0) : g.constant_value();
    };

    AnticyclicResult r;
    std::vector<std::size_t> tuple(args, 0);
    while (true) {
        Rational sum(0);
        for (std::size_t s = 0; s < args; ++s) {
            const Rational term = nested(tuple, s);
            if (alternating && s % 2 == 1) {
                sum -= term;
            } else {
                sum += term;
            }
        }
        if (!sum.is_zero()) {
            r.ok = false;
            r.witness = tuple;
            r.defect = sum;
            return r;
        }
        bool carried = false;
        for (std::size_t j = args; j-- > 0;) {
            if (++tuple[j] < w) {
                carried = true;
                break;
            }
            tuple[j] = 0;
        }
        if (!carried) { break; }
    }
    return r;
}

inline AnticyclicResult check_anticyclic(const VectorField &x) {
    if (x.is_zero()) { return AnticyclicResult{}; }
    const auto d = x.poly_degree();
    if (!d) { throw DegreeError("check_anticyclic: field is not homogeneous"); }
    return check_anticyclic(x, *d);
}

struct CohomologicalResult {
    bool ok = true;
    std::array<std::size_t, 2> witness{0, 0};
    Polynomial defect;
};

/// Degree-+1 cohomological condition {L(l1), L(l2)} - L({L(l1), l2}) = 0,
/// checked on all basis pairs. The equivalent Maurer-Cartan route through
/// psi is computed as well; the two must agree.
inline CohomologicalResult check_cohomological(const VectorField &l) {
    if (!l.is_zero()) {
        const auto d = l.poly_degree();
        if (!d || *d != 1) { throw DegreeError("check_cohomological: field must have polynomial degree +1"); }
    }
    const std::size_t n = l.n();
    const auto basis = plane_basis(n);
    CohomologicalResult r;
    r.defect = Polynomial::zero(n);
    std::vector<Polynomial> images;
    images.reserve(2 * n);
    for (const auto &b : basis) { images.push_back(l.apply(b)); }
    for (std::size_t a = 0; a < 2 * n && r.ok; ++a) {
        for (std::size_t b = 0; b < 2 * n; ++b) {
            const Polynomial defect = poisson(images[a], images[b]) - l.apply(poisson(images[a], basis[b]));
            if (!defect.is_zero()) {
                r.ok = false;
                r.witness = {a, b};
                r.defect = defect;
                break;
            }
        }
    }
    const bool mc = is_maurer_cartan(psi_with_degree(l, 1)).ok;
    if (mc != r.ok) {
        throw Error("check_cohomological: direct check and Maurer-Cartan route disagree");
    }
    return r;
}

/// Degree-+1 vector field with its cohomological and anti-cyclic flags
/// computed once at construction (values are immutable).
class StructureField {
  public:
    StructureField() = default;

    explicit StructureField(VectorField f)
      : field_(std::move(f)) {
        if (!field_.is_zero()) {
            const auto d = field_.poly_degree();
            if (!d || *d != 1) { throw DegreeError("StructureField: field must have polynomial degree +1"); }
        }
        coh_ = check_cohomological(field_);
        anti_ = check_anticyclic(field_, 1);
    }

    std::size_t n() const { return field_.n(); }
    const VectorField &field() const { return field_; }

    bool cohomological() const { return coh_.ok; }
    bool anticyclic() const { return anti_.ok; }
    const CohomologicalResult &cohomological_result() const { return coh_; }
    const AnticyclicResult &anticyclic_result() const { return anti_; }

    Polynomial apply(const Polynomial &f) const { return field_.apply(f); }

    friend bool operator==(const StructureField &a, const StructureField &b) { return a.field_ == b.field_; }
    friend bool operator!=(const StructureField &a, const StructureField &b) { return !(a == b); }

  private:
    VectorField field_;
    CohomologicalResult coh_;
    AnticyclicResult anti_;
};

inline bool is_cohomological(const StructureField &l) { return l.cohomological(); }
inline bool is_anticyclic(const StructureField &l) { return l.anticyclic(); }

/// A cohomological field that is also anti-cyclic.
inline bool is_leibniz_field(const StructureField &l) { return l.cohomological() && l.anticyclic(); }

/// psi of a structure field is always the arity-2 cochain.
inline Cochain psi(const StructureField &l, std::size_t cap = kDefaultArityCap) {
    return psi_with_degree(l.field(), 1, cap);
}

/// Derived bracket [f1, f2]_L = {L(f1), f2}, defined for all polynomials.
inline Polynomial derived_bracket(const StructureField &l, const Polynomial &f1, const Polynomial &f2) {
    return poisson(l.apply(f1), f2);
}

/// Skew part [l1, l2]_- = {L(l1), l2} - {L(l2), l1}.
inline Polynomial skew_derived_bracket(const StructureField &l, const Polynomial &l1, const Polynomial &l2) {
    return derived_bracket(l, l1, l2) - derived_bracket(l, l2, l1);
}

/// Leibniz 3-form (l1, l2, l3)_L = ([l1, l2]_L, l3)_-.
inline Rational leibniz_3form(const StructureField &l, const Polynomial &l1, const Polynomial &l2,
                              const Polynomial &l3) {
    if (!l.cohomological()) { throw PreconditionError("leibniz_3form: field is not cohomological"); }
    return pairing_minus(derived_bracket(l, l1, l2), l3);
}

/// Structure tensor of the skew bracket: Lambda = [pi, L], satisfying
/// [l1, l2]_- = [[Lambda, l1], l2].
inline Bivector lambda_tensor(const StructureField &l) {
    return sn_bracket(poisson_bivector(l.n()), l.field());
}

/// Leibniz 1-form theta_L = i_L omega.
inline DifferentialForm leibniz_one_form(const StructureField &l) {
    return interior(l.field(), symplectic_form(l.n()));
}

/// Structure field of an algebra by structure constants:
/// L = -C^k_ij p_k q^j d/dp_i - C^k_ij q^i q^j d/dq^k.
inline StructureField structure_field(const LeibnizAlgebra &a) {
    if (!check_leibniz(a).ok) { throw PreconditionError("structure_field: bracket fails the Leibniz identity"); }
    const std::size_t d = a.dim();
    VectorField l(d);
    for (std::size_t i = 0; i < d; ++i) {
        Polynomial comp(d);
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                if (a.c(i, j, k).is_zero()) { continue; }
                comp -= a.c(i, j, k) * (Polynomial::variable(d, k) * Polynomial::variable(d, d + j));
            }
        }
        l.component(i) = comp;
    }
    for (std::size_t k = 0; k < d; ++k) {
        Polynomial comp(d);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                if (a.c(i, j, k).is_zero()) { continue; }
                comp -= a.c(i, j, k) * (Polynomial::variable(d, d + i) * Polynomial::variable(d, d + j));
            }
        }
        l.component(d + k) = comp;
    }
    return StructureField(std::move(l));
}

/// Semi-direct product bracket on W = g + g* as an arity-2 cochain, with the
/// two-side dual actions <p1,[p2,q]> = -<[p2,p1],q> and
/// <p1,[q,p2]> = <[p1,p2]+[p2,p1],q>.
inline Cochain semidirect_double(const LeibnizAlgebra &a) {
    if (!check_leibniz(a).ok) { throw PreconditionError("semidirect_double: bracket fails the Leibniz identity"); }
    const std::size_t d = a.dim();
    Cochain mu(2 * d, 2);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                const Rational &c = a.c(i, j, k);
                if (c.is_zero()) { continue; }
                // [e_i, e_j] = C^k_ij e_k
                mu.at({i, j}, k) = c;
                // [e_i, eps^k] gets -C^k_im on eps^m: here c = C^k_ij contributes
                // to the pair (i, eps^k) at output eps^j
                mu.at({i, d + k}, d + j) -= c;
                // [eps^k, e_i] = sum_m (C^k_mi + C^k_im) eps^m
                mu.at({d + k, j}, d + i) += c; // C^k_ij contributes to [eps^k, e_j] at eps^i
                mu.at({d + k, i}, d + j) += c; // and to [eps^k, e_i] at eps^j
            }
        }
    }
    return mu;
}

struct InvarianceResult {
    bool left_ok = true;
    bool right_ok = true;
    std::array<std::size_t, 3> left_witness{0, 0, 0};
    std::array<std::size_t, 3> right_witness{0, 0, 0};
    Rational left_defect;
    Rational right_defect;

    bool ok() const { return left_ok && right_ok; }
};

/// Invariance of the anti-symmetric pairing with respect to a binary bracket
/// on W: for all basis triples,
///   (l1, [l2, l3])_- = -([l2, l1], l3)_-   (left)
///   (l1, [l2, l3])_- = ([l1, l3] + [l3, l1], l2)_-   (right).
inline InvarianceResult check_invariance(const Cochain &mu) {
    if (mu.arity() != 2) { throw ArityError("check_invariance: expected an arity-2 cochain"); }
    if (mu.dim() % 2 != 0) { throw DimensionError("check_invariance: cochain dimension must be even"); }
    const std::size_t n = mu.dim() / 2;
    const std::size_t w = mu.dim();
    auto pairing = [n](std::size_t a, std::size_t b) -> Rational {
        if (a < n && b == a + n) { return Rational(1); }
        if (b < n && a == b + n) { return Rational(-1); }
        return Rational(0);
    };
    InvarianceResult r;
    for (std::size_t a = 0; a < w; ++a) {
        for (std::size_t b = 0; b < w; ++b) {
            for (std::size_t c = 0; c < w; ++c) {
                Rational lhs(0);
                for (std::size_t k = 0; k < w; ++k) {
                    const Rational &t = mu.at({b, c}, k);
                    if (!t.is_zero()) { lhs += pairing(a, k) * t; }
                }
                if (r.left_ok) {
                    Rational rhs(0);
                    for (std::size_t k = 0; k < w; ++k) {
                        const Rational &t = mu.at({b, a}, k);
                        if (!t.is_zero()) { rhs += pairing(k, c) * t; }
                    }
                    if (lhs != -rhs) {
                        r.left_ok = false;
                        r.left_witness = {a, b, c};
                        r.left_defect = lhs + rhs;
                    }
                }
                if (r.right_ok) {
                    Rational rhs(0);
                    for (std::size_t k = 0; k < w; ++k) {
                        const Rational t = mu.at({a, c}, k) + mu.at({c, a}, k);
                        if (!t.is_zero()) { rhs += pairing(k, b) * t; }
                    }
                    if (lhs != rhs) {
                        r.right_ok = false;
                        r.right_witness = {a, b, c};
                        r.right_defect = lhs - rhs;
                    }
                }
                if (!r.left_ok && !r.right_ok) { return r; }
            }
        }
    }
    return r;
}

/// Invariance theorem: a Leibniz field induces a bracket that is invariant
/// for the Poisson pairing.
inline bool invariance_theorem_check(const StructureField &l) {
    if (!is_leibniz_field(l)) { throw PreconditionError("invariance_theorem_check: field is not Leibniz"); }
    return check_invariance(psi(l)).ok();
}

/// Inverse of psi on arity-2 cochains whose left actions preserve the
/// Poisson pairing infinitesimally: reconstructs the unique degree-+1 field
/// L with psi(L) = mu.
inline StructureField field_from_bracket(const Cochain &mu) {
    if (mu.arity() != 2) { throw ArityError("field_from_bracket: expected an arity-2 cochain"); }
    if (mu.dim() % 2 != 0) { throw DimensionError("field_from_bracket: cochain dimension must be even"); }
    const std::size_t n = mu.dim() / 2;
    const std::size_t w = mu.dim();
    auto pairing = [n](std::size_t a, std::size_t b) -> Rational {
        if (a < n && b == a + n) { return Rational(1); }
        if (b < n && a == b + n) { return Rational(-1); }
        return Rational(0);
    };
    // left invariance of the pairing under each mu(a, -)
    for (std::size_t a = 0; a < w; ++a) {
        for (std::size_t b = 0; b < w; ++b) {
            for (std::size_t c = 0; c < w; ++c) {
                Rational v(0);
                for (std::size_t k = 0; k < w; ++k) {
                    v += mu.at({a, b}, k) * pairing(k, c);
                    v += mu.at({a, c}, k) * pairing(b, k);
                }
                if (!v.is_zero()) {
                    throw NotRepresentableError(
                        "field_from_bracket: left action does not preserve the pairing");
                }
            }
        }
    }
    const auto basis = plane_basis(n);
    VectorField l(n);
    for (std::size_t a = 0; a < w; ++a) {
        // images of the basis under mu(a, -)
        auto image = [&](std::size_t b) {
            Polynomial g(n);
            for (std::size_t k = 0; k < w; ++k) {
                const Rational &t = mu.at({a, b}, k);
                if (!t.is_zero()) { g += t * basis[k]; }
            }
            return g;
        };
        // Euler reconstruction of the quadratic generator of mu(a, -)
        Polynomial h(n);
        for (std::size_t j = 0; j < n; ++j) {
            h += basis[j] * image(n + j);
            h -= basis[n + j] * image(j);
        }
        h *= Rational(1, 2);
        l.component(a) = h;
    }
    StructureField result{l};
    if (psi(result) != mu) {
        throw NotRepresentableError("field_from_bracket: bracket is not a higher derived bracket");
    }
    return result;
}

/// The key lemma: for a degree-+1 field X and a degree-0 Hamiltonian field H,
/// psi[X, H] = [[psi_X, psi_H]].
inline bool psi_lemma_check(const VectorField &x, const VectorField &h) {
    if (!x.is_zero()) {
        const auto dx = x.poly_degree();
        if (!dx || *dx != 1) { throw DegreeError("psi_lemma_check: X must have polynomial degree +1"); }
    }
    if (!h.is_zero()) {
        const auto dh = h.poly_degree();
        if (!dh || *dh != 0) { throw PreconditionError("psi_lemma_check: H must have polynomial degree 0"); }
        if (!hamiltonian_generator(h)) { throw PreconditionError("psi_lemma_check: H is not Hamiltonian"); }
    }
    const Cochain lhs = psi_with_degree(commutator(x, h), 1);
    const Cochain rhs = graded_bracket(psi_with_degree(x, 1), psi_with_degree(h, 0));
    return lhs == rhs;
}

} // namespace loday
