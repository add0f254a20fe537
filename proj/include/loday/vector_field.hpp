#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "loday/error.hpp"
#include "loday/polynomial.hpp"
#include "loday/ratmat.hpp"

namespace loday {

/// Bidegree of a vector field as a derivation: component bidegree plus the
/// bidegree of the basis derivation (d/dp_i is (-1,0), d/dq^i is (0,-1)).
struct FieldBidegree {
    enum class Kind { Zero, Homogeneous, Mixed };
    Kind kind = Kind::Zero;
    long p = 0;
    long q = 0;

    static FieldBidegree zero() { return {}; }
    static FieldBidegree homogeneous(long p, long q) { return {Kind::Homogeneous, p, q}; }
    static FieldBidegree mixed() { return {Kind::Mixed, 0, 0}; }

    bool is_zero() const { return kind == Kind::Zero; }
    bool is_homogeneous() const { return kind == Kind::Homogeneous; }
    bool is_mixed() const { return kind == Kind::Mixed; }

    friend bool operator==(const FieldBidegree &a, const FieldBidegree &b) {
        if (a.kind != b.kind) { return false; }
        if (a.kind != Kind::Homogeneous) { return true; }
        return a.p == b.p && a.q == b.q;
    }
    friend bool operator!=(const FieldBidegree &a, const FieldBidegree &b) { return !(a == b); }
};

/// Polynomial-coefficient vector field on the plane. Component slot a is the
/// coefficient of d/dx^a in the ordering p_1..p_n, q^1..q^n. A field has
/// polynomial degree d when every nonzero component is homogeneous of total
/// degree d+1 (it then raises polynomial degree by d).
class VectorField {
  public:
    VectorField() = default;

    explicit VectorField(std::size_t n)
      : n_(n)
      , comps_(2 * n, Polynomial(n)) {}

    static VectorField zero(std::size_t n) { return VectorField(n); }

    /// The basis derivation d/dx^slot.
    static VectorField basis(std::size_t n, std::size_t slot) {
        VectorField x(n);
        x.component(slot) = Polynomial::constant(n, Rational(1));
        return x;
    }

    std::size_t n() const { return n_; }

    Polynomial &component(std::size_t slot) {
        if (slot >= comps_.size()) { throw IndexError("VectorField: component slot out of range"); }
        return comps_[slot];
    }
    const Polynomial &component(std::size_t slot) const {
        if (slot >= comps_.size()) { throw IndexError("VectorField: component slot out of range"); }
        return comps_[slot];
    }

    bool is_zero() const {
        for (const auto &c : comps_) {
            if (!c.is_zero()) { return false; }
        }
        return true;
    }

    VectorField &operator+=(const VectorField &o) {
        require_same_plane(o);
        for (std::size_t a = 0; a < comps_.size(); ++a) { comps_[a] += o.comps_[a]; }
        return *this;
    }
    VectorField &operator-=(const VectorField &o) {
        require_same_plane(o);
        for (std::size_t a = 0; a < comps_.size(); ++a) { comps_[a] -= o.comps_[a]; }
        return *this;
    }
    VectorField &operator*=(const Rational &s) {
        for (auto &c : comps_) { c *= s; }
        return *this;
    }
    VectorField operator-() const {
        VectorField r(n_);
        for (std::size_t a = 0; a < comps_.size(); ++a) { r.comps_[a] = -comps_[a]; }
        return r;
    }

    friend VectorField operator+(VectorField a, const VectorField &b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField &b) { return a -= b; }
    friend VectorField operator*(const Rational &s, VectorField a) { return a *= s; }
    friend VectorField operator*(VectorField a, const Rational &s) { return a *= s; }

    friend bool operator==(const VectorField &a, const VectorField &b) {
        return a.n_ == b.n_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const VectorField &a, const VectorField &b) { return !(a == b); }

    /// X(f), the derivation action.
    Polynomial apply(const Polynomial &f) const {
        if (f.n() != n_) { throw DimensionError("VectorField: field and polynomial on different planes"); }
        Polynomial r(n_);
        for (std::size_t a = 0; a < comps_.size(); ++a) {
            if (comps_[a].is_zero()) { continue; }
            r += comps_[a] * f.partial(a);
        }
        return r;
    }

    /// Polynomial degree: every nonzero component homogeneous of total
    /// degree d+1. The zero field has no determined degree.
    std::optional<long> poly_degree() const {
        std::optional<long> deg;
        for (const auto &c : comps_) {
            if (c.is_zero()) { continue; }
            std::optional<std::size_t> total;
            for (const auto &[m, coeff] : c.terms()) {
                if (total && *total != m.total_degree()) { return std::nullopt; }
                total = m.total_degree();
            }
            const long d = static_cast<long>(*total) - 1;
            if (deg && *deg != d) { return std::nullopt; }
            deg = d;
        }
        return deg; // nullopt also when the field is zero
    }

    FieldBidegree field_bidegree() const {
        bool found = false;
        long p = 0;
        long q = 0;
        for (std::size_t a = 0; a < comps_.size(); ++a) {
            if (comps_[a].is_zero()) { continue; }
            const auto bd = comps_[a].bidegree();
            if (bd.is_mixed()) { return FieldBidegree::mixed(); }
            const long dp = bd.p - (a < n_ ? 1 : 0);
            const long dq = bd.q - (a < n_ ? 0 : 1);
            if (found && (dp != p || dq != q)) { return FieldBidegree::mixed(); }
            p = dp;
            q = dq;
            found = true;
        }
        return found ? FieldBidegree::homogeneous(p, q) : FieldBidegree::zero();
    }

    void require_same_plane(const VectorField &o) const {
        if (n_ != o.n_) { throw DimensionError("VectorField: operands on planes of different half-dimension"); }
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t a = 0; a < comps_.size(); ++a) {
            if (comps_[a].is_zero()) { continue; }
            if (!first) { os << " + "; }
            first = false;
            os << "(" << comps_[a].str() << ")*d/d";
            if (a < n_) {
                os << "p" << (a + 1);
            } else {
                os << "q" << (a - n_ + 1);
            }
        }
        if (first) { os << "0"; }
        return os.str();
    }

    friend std::ostream &operator<<(std::ostream &os, const VectorField &x) { return os << x.str(); }

  private:
    std::size_t n_ = 0;
    std::vector<Polynomial> comps_;
};

inline Polynomial apply(const VectorField &x, const Polynomial &f) { return x.apply(f); }

/// Lie bracket of vector fields, [X,Y](f) = X(Y(f)) - Y(X(f)).
inline VectorField commutator(const VectorField &x, const VectorField &y) {
    x.require_same_plane(y);
    VectorField r(x.n());
    for (std::size_t a = 0; a < 2 * x.n(); ++a) {
        r.component(a) = x.apply(y.component(a)) - y.apply(x.component(a));
    }
    return r;
}

/// Hamiltonian vector field H_f = {f, -}.
inline VectorField hamiltonian(const Polynomial &f) {
    const std::size_t n = f.n();
    VectorField h(n);
    for (std::size_t i = 0; i < n; ++i) {
        h.component(i) = -f.partial(n + i); // d/dp_i coefficient
        h.component(n + i) = f.partial(i);  // d/dq^i coefficient
    }
    return h;
}

inline FieldBidegree field_bidegree(const VectorField &x) { return x.field_bidegree(); }

/// Recovers h with hamiltonian(h) == x for a homogeneous field, via the Euler
/// identity h = (1/k)(sum_j p_j X(q^j) - sum_j q^j X(p_j)). Returns nullopt
/// when x is not Hamiltonian. The zero field yields h = 0.
inline std::optional<Polynomial> hamiltonian_generator(const VectorField &x) {
    const std::size_t n = x.n();
    if (x.is_zero()) { return Polynomial::zero(n); }
    const auto deg = x.poly_degree();
    if (!deg) { return std::nullopt; }
    const long k = *deg + 2; // degree of the candidate generator
    if (k <= 0) { return std::nullopt; }
    Polynomial h(n);
    for (std::size_t j = 0; j < n; ++j) {
        h += Polynomial::variable(n, j) * x.component(n + j);
        h -= Polynomial::variable(n, n + j) * x.component(j);
    }
    h *= Rational(1, k);
    if (hamiltonian(h) != x) { return std::nullopt; }
    return h;
}

/// exp(X_H)(T) = sum_k (1/k!) ad_H^k(T) with ad_H = [-, H]. The series must
/// terminate by nilpotency within max_order iterations.
inline VectorField exp_flow(const VectorField &t, const VectorField &h, unsigned max_order = 8) {
    t.require_same_plane(h);
    if (!h.is_zero() && h.field_bidegree().is_mixed()) {
        throw PreconditionError("exp_flow: generator does not have a homogeneous bidegree");
    }
    VectorField result = t;
    VectorField iterate = t;
    for (unsigned k = 1; k <= max_order; ++k) {
        iterate = commutator(iterate, h);
        if (iterate.is_zero()) { return result; }
        result += inverse_factorial(k) * iterate;
    }
    throw NilpotencyError("exp_flow: series did not terminate within the allowed order");
}

/// Push-forward along the linear coordinate change xbar = T x. T must be
/// invertible; rows of T are the barred coordinates expressed in the old ones.
inline VectorField push_forward(const VectorField &x, const RationalMatrix &t) {
    const std::size_t n = x.n();
    const std::size_t w = 2 * n;
    if (t.rows() != w || t.cols() != w) { throw DimensionError("push_forward: transformation shape mismatch"); }
    const RationalMatrix tinv = t.inverse();
    // old variable x^b written in barred coordinates
    std::vector<Polynomial> old_in_barred;
    old_in_barred.reserve(w);
    for (std::size_t b = 0; b < w; ++b) {
        std::vector<Rational> coeffs(w);
        for (std::size_t c = 0; c < w; ++c) { coeffs[c] = tinv.at(b, c); }
        old_in_barred.push_back(linear_from_coefficients(n, coeffs));
    }
    VectorField r(n);
    for (std::size_t a = 0; a < w; ++a) {
        std::vector<Rational> row(w);
        for (std::size_t b = 0; b < w; ++b) { row[b] = t.at(a, b); }
        const Polynomial barred_coord = linear_from_coefficients(n, row);
        r.component(a) = x.apply(barred_coord).substitute(old_in_barred);
    }
    return r;
}

} // namespace loday
