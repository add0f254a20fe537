#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "loday/error.hpp"
#include "loday/polynomial.hpp"
#include "loday/vector_field.hpp"

namespace loday {

/*
 * Multivector calculus up to degree 2, enough to house the Poisson bivector
 * pi = sum_i d/dq^i ^ d/dp_i and the structure tensor Lambda = [pi, L]. The
 * Schouten-Nijenhuis bracket extends the commutator as a graded Poisson
 * bracket of degree -1, with [X,f] := X(f) and [f,g] := 0; attempting to
 * leave the implemented degree range is a typed error, never a truncation.
 */

/// Degree-2 multivector, stored as the full antisymmetric component matrix
/// B^{ab} with B = (1/2) B^{ab} d/dx^a ^ d/dx^b.
class Bivector {
  public:
    Bivector() = default;

    explicit Bivector(std::size_t n)
      : n_(n)
      , comps_(4 * n * n, Polynomial(n)) {}

    std::size_t n() const { return n_; }

    const Polynomial &at(std::size_t a, std::size_t b) const { return comps_[a * 2 * n_ + b]; }

    /// Sets B^{ab} and B^{ba} = -value together.
    void set(std::size_t a, std::size_t b, const Polynomial &value) {
        if (a == b) {
            if (!value.is_zero()) { throw Error("Bivector: diagonal components must vanish"); }
            return;
        }
        comps_[a * 2 * n_ + b] = value;
        comps_[b * 2 * n_ + a] = -value;
    }

    bool is_zero() const {
        for (const auto &c : comps_) {
            if (!c.is_zero()) { return false; }
        }
        return true;
    }

    Bivector &operator+=(const Bivector &o) {
        require_same_plane(o);
        for (std::size_t i = 0; i < comps_.size(); ++i) { comps_[i] += o.comps_[i]; }
        return *this;
    }
    Bivector operator-() const {
        Bivector r(n_);
        for (std::size_t i = 0; i < comps_.size(); ++i) { r.comps_[i] = -comps_[i]; }
        return r;
    }
    friend Bivector operator+(Bivector a, const Bivector &b) { return a += b; }
    friend Bivector operator-(Bivector a, const Bivector &b) {
        a += -b;
        return a;
    }

    friend bool operator==(const Bivector &a, const Bivector &b) {
        return a.n_ == b.n_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const Bivector &a, const Bivector &b) { return !(a == b); }

    void require_same_plane(const Bivector &o) const {
        if (n_ != o.n_) { throw DimensionError("Bivector: operands on planes of different half-dimension"); }
    }

  private:
    std::size_t n_ = 0;
    std::vector<Polynomial> comps_; // row-major (2n)x(2n), antisymmetric
};

/// The canonical Poisson bivector pi = sum_i d/dq^i ^ d/dp_i.
inline Bivector poisson_bivector(std::size_t n) {
    Bivector pi(n);
    for (std::size_t i = 0; i < n; ++i) {
        pi.set(n + i, i, Polynomial::constant(n, Rational(1)));
    }
    return pi;
}

// SN bracket, degree by degree. Conventions are locked by the unit test
// asserting [[pi, f], g] == poisson(f, g).

inline Polynomial sn_bracket(const VectorField &x, const Polynomial &f) { return x.apply(f); }

inline Polynomial sn_bracket(const Polynomial &f, const VectorField &x) { return -x.apply(f); }

inline Polynomial sn_bracket(const Polynomial &f, const Polynomial &g) {
    f.require_same_plane(g);
    return Polynomial::zero(f.n());
}

inline VectorField sn_bracket(const VectorField &x, const VectorField &y) { return commutator(x, y); }

/// [B, f]^a = B^{ac} df/dx^c.
inline VectorField sn_bracket(const Bivector &b, const Polynomial &f) {
    if (b.n() != f.n()) { throw DimensionError("sn_bracket: operands on different planes"); }
    const std::size_t w = 2 * b.n();
    VectorField r(b.n());
    for (std::size_t a = 0; a < w; ++a) {
        Polynomial comp(b.n());
        for (std::size_t c = 0; c < w; ++c) {
            if (b.at(a, c).is_zero()) { continue; }
            comp += b.at(a, c) * f.partial(c);
        }
        r.component(a) = comp;
    }
    return r;
}

inline VectorField sn_bracket(const Polynomial &f, const Bivector &b) { return sn_bracket(b, f); }

/// Lie derivative of a bivector along a field:
/// (L_X B)^{ab} = X(B^{ab}) - (d_c X^a) B^{cb} - (d_c X^b) B^{ac}.
inline Bivector sn_bracket(const VectorField &x, const Bivector &b) {
    if (b.n() != x.n()) { throw DimensionError("sn_bracket: operands on different planes"); }
    const std::size_t w = 2 * x.n();
    Bivector r(x.n());
    for (std::size_t a = 0; a < w; ++a) {
        for (std::size_t bb = a + 1; bb < w; ++bb) {
            Polynomial comp = x.apply(b.at(a, bb));
            for (std::size_t c = 0; c < w; ++c) {
                comp -= x.component(a).partial(c) * b.at(c, bb);
                comp -= x.component(bb).partial(c) * b.at(a, c);
            }
            r.set(a, bb, comp);
        }
    }
    return r;
}

inline Bivector sn_bracket(const Bivector &b, const VectorField &x) { return -sn_bracket(x, b); }

/// Multivector of derivation degree 0, 1 or 2.
using Multivector = std::variant<Polynomial, VectorField, Bivector>;

inline std::size_t multivector_degree(const Multivector &m) { return m.index(); }

/// Generic dispatcher. Degree-2-by-degree-2 (and anything else whose result
/// would have degree > 2) is an ArityError.
inline Multivector sn_bracket(const Multivector &a, const Multivector &b) {
    return std::visit(
        [](const auto &x, const auto &y) -> Multivector {
            using X = std::decay_t<decltype(x)>;
            using Y = std::decay_t<decltype(y)>;
            if constexpr (std::is_same_v<X, Bivector> && std::is_same_v<Y, Bivector>) {
                throw ArityError("sn_bracket: result degree 3 is outside the implemented range");
            } else {
                return Multivector(sn_bracket(x, y));
            }
        },
        a, b);
}

} // namespace loday
