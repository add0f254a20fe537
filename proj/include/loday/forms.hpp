#pragma once

#include <cstddef>
#include <vector>

#include "loday/error.hpp"
#include "loday/polynomial.hpp"
#include "loday/vector_field.hpp"

namespace loday {

/*
 * Differential forms of degree <= 2: the symplectic form omega, the 1-form
 * theta_L = i_L omega attached to a structure field, and its differential.
 * Degree 2 is stored as the full antisymmetric coefficient matrix F_{ab}
 * with alpha = (1/2) F_{ab} dx^a ^ dx^b; 3-forms are a typed error.
 *
 * Sign conventions: omega = sum_i dp_i ^ dq^i and the interior product
 * contracts the first slot. Relative to the Poisson bivector this is the
 * choice that makes d(theta_L)(H_l1, H_l2) agree with the skew derived
 * bracket; the test suite pins it.
 */
class DifferentialForm {
  public:
    DifferentialForm() = default;

    static DifferentialForm function(const Polynomial &f) {
        DifferentialForm a;
        a.n_ = f.n();
        a.degree_ = 0;
        a.comps_ = {f};
        return a;
    }

    static DifferentialForm one_form(std::size_t n) {
        DifferentialForm a;
        a.n_ = n;
        a.degree_ = 1;
        a.comps_.assign(2 * n, Polynomial(n));
        return a;
    }

    static DifferentialForm two_form(std::size_t n) {
        DifferentialForm a;
        a.n_ = n;
        a.degree_ = 2;
        a.comps_.assign(4 * n * n, Polynomial(n));
        return a;
    }

    std::size_t n() const { return n_; }
    int degree() const { return degree_; }

    const Polynomial &value() const {
        require_degree(0);
        return comps_[0];
    }

    /// Coefficient of dx^a (degree 1).
    const Polynomial &coeff(std::size_t a) const {
        require_degree(1);
        return comps_[a];
    }
    Polynomial &coeff(std::size_t a) {
        require_degree(1);
        return comps_[a];
    }

    /// Coefficient F_{ab} (degree 2).
    const Polynomial &coeff(std::size_t a, std::size_t b) const {
        require_degree(2);
        return comps_[a * 2 * n_ + b];
    }

    /// Sets F_{ab} and F_{ba} = -value together (degree 2).
    void set(std::size_t a, std::size_t b, const Polynomial &value) {
        require_degree(2);
        if (a == b) {
            if (!value.is_zero()) { throw Error("DifferentialForm: diagonal 2-form components must vanish"); }
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

    friend bool operator==(const DifferentialForm &a, const DifferentialForm &b) {
        return a.n_ == b.n_ && a.degree_ == b.degree_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const DifferentialForm &a, const DifferentialForm &b) { return !(a == b); }

    void require_degree(int d) const {
        if (degree_ != d) { throw DegreeError("DifferentialForm: wrong form degree for this access"); }
    }

  private:
    std::size_t n_ = 0;
    int degree_ = 0;
    std::vector<Polynomial> comps_;
};

/// omega = sum_i dp_i ^ dq^i.
inline DifferentialForm symplectic_form(std::size_t n) {
    DifferentialForm w = DifferentialForm::two_form(n);
    for (std::size_t i = 0; i < n; ++i) {
        w.set(i, n + i, Polynomial::constant(n, Rational(1)));
    }
    return w;
}

/// Contraction in the first slot; drops the degree by one.
inline DifferentialForm interior(const VectorField &x, const DifferentialForm &alpha) {
    if (x.n() != alpha.n()) { throw DimensionError("interior: operands on different planes"); }
    const std::size_t w = 2 * x.n();
    if (alpha.degree() == 1) {
        Polynomial r(x.n());
        for (std::size_t a = 0; a < w; ++a) { r += x.component(a) * alpha.coeff(a); }
        return DifferentialForm::function(r);
    }
    if (alpha.degree() == 2) {
        DifferentialForm r = DifferentialForm::one_form(x.n());
        for (std::size_t b = 0; b < w; ++b) {
            Polynomial c(x.n());
            for (std::size_t a = 0; a < w; ++a) {
                if (alpha.coeff(a, b).is_zero()) { continue; }
                c += x.component(a) * alpha.coeff(a, b);
            }
            r.coeff(b) = c;
        }
        return r;
    }
    throw DegreeError("interior: cannot contract a 0-form");
}

/// Exterior derivative on degrees 0 and 1; 3-forms are unsupported.
inline DifferentialForm exterior_d(const DifferentialForm &alpha) {
    const std::size_t n = alpha.n();
    const std::size_t w = 2 * n;
    if (alpha.degree() == 0) {
        DifferentialForm r = DifferentialForm::one_form(n);
        for (std::size_t a = 0; a < w; ++a) { r.coeff(a) = alpha.value().partial(a); }
        return r;
    }
    if (alpha.degree() == 1) {
        DifferentialForm r = DifferentialForm::two_form(n);
        for (std::size_t a = 0; a < w; ++a) {
            for (std::size_t b = a + 1; b < w; ++b) {
                r.set(a, b, alpha.coeff(b).partial(a) - alpha.coeff(a).partial(b));
            }
        }
        return r;
    }
    throw DegreeError("exterior_d: 3-forms are outside the implemented range");
}

/// alpha(X, Y) for a 2-form.
inline Polynomial eval_2form(const DifferentialForm &alpha, const VectorField &x, const VectorField &y) {
    alpha.require_degree(2);
    if (x.n() != alpha.n() || y.n() != alpha.n()) { throw DimensionError("eval_2form: operands on different planes"); }
    const std::size_t w = 2 * alpha.n();
    Polynomial r(alpha.n());
    for (std::size_t a = 0; a < w; ++a) {
        for (std::size_t b = 0; b < w; ++b) {
            if (alpha.coeff(a, b).is_zero()) { continue; }
            r += alpha.coeff(a, b) * x.component(a) * y.component(b);
        }
    }
    return r;
}

/// Wedge of two 1-forms.
inline DifferentialForm wedge(const DifferentialForm &alpha, const DifferentialForm &beta) {
    alpha.require_degree(1);
    beta.require_degree(1);
    if (alpha.n() != beta.n()) { throw DimensionError("wedge: operands on different planes"); }
    const std::size_t w = 2 * alpha.n();
    DifferentialForm r = DifferentialForm::two_form(alpha.n());
    for (std::size_t a = 0; a < w; ++a) {
        for (std::size_t b = a + 1; b < w; ++b) {
            r.set(a, b, alpha.coeff(a) * beta.coeff(b) - alpha.coeff(b) * beta.coeff(a));
        }
    }
    return r;
}

} // namespace loday
