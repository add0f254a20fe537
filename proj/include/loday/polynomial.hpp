#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "loday/error.hpp"
#include "loday/rational.hpp"

namespace loday {

/*
 * Exact sparse polynomials on the symplectic plane K[p, q].
 *
 * The plane of half-dimension n carries 2n canonical variables; variable
 * slots 0..n-1 are p_1..p_n and slots n..2n-1 are q^1..q^n. A monomial is an
 * exponent vector of length 2n; a polynomial maps monomials to nonzero
 * rational coefficients, iterated in graded-lexicographic order.
 *
 * The bidegree of a monomial is (p-degree, q-degree); p_i has bidegree (1,0)
 * and q^i has (0,1). The canonical Poisson bracket {p_i, q^j} = delta_i^j has
 * bidegree (-1,-1).
 */

struct Monomial {
    std::vector<std::uint32_t> exp; // length 2n

    std::size_t total_degree() const {
        return std::accumulate(exp.begin(), exp.end(), std::size_t{0});
    }

    std::size_t p_degree() const {
        const std::size_t n = exp.size() / 2;
        return std::accumulate(exp.begin(), exp.begin() + static_cast<std::ptrdiff_t>(n), std::size_t{0});
    }

    std::size_t q_degree() const { return total_degree() - p_degree(); }

    friend bool operator==(const Monomial &a, const Monomial &b) { return a.exp == b.exp; }
};

/// Graded lexicographic order: total degree first; within a degree the
/// lexicographically larger exponent vector comes first, so p-variables
/// precede q-variables. Fixes the canonical term iteration everywhere.
struct GradedLexLess {
    bool operator()(const Monomial &a, const Monomial &b) const {
        const std::size_t da = a.total_degree();
        const std::size_t db = b.total_degree();
        if (da != db) { return da < db; }
        return a.exp > b.exp;
    }
};

/// Bidegree of a polynomial: either zero, homogeneous (p,q), or mixed.
struct PolyBidegree {
    enum class Kind { Zero, Homogeneous, Mixed };
    Kind kind = Kind::Zero;
    long p = 0;
    long q = 0;

    static PolyBidegree zero() { return {}; }
    static PolyBidegree homogeneous(long p, long q) { return {Kind::Homogeneous, p, q}; }
    static PolyBidegree mixed() { return {Kind::Mixed, 0, 0}; }

    bool is_zero() const { return kind == Kind::Zero; }
    bool is_homogeneous() const { return kind == Kind::Homogeneous; }
    bool is_mixed() const { return kind == Kind::Mixed; }

    friend bool operator==(const PolyBidegree &a, const PolyBidegree &b) {
        if (a.kind != b.kind) { return false; }
        if (a.kind != Kind::Homogeneous) { return true; }
        return a.p == b.p && a.q == b.q;
    }
    friend bool operator!=(const PolyBidegree &a, const PolyBidegree &b) { return !(a == b); }
};

class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    Polynomial() = default;

    explicit Polynomial(std::size_t n)
      : n_(n) {}

    static Polynomial zero(std::size_t n) { return Polynomial(n); }

    static Polynomial constant(std::size_t n, Rational c) {
        Polynomial f(n);
        if (!c.is_zero()) { f.terms_.emplace(Monomial{std::vector<std::uint32_t>(2 * n, 0)}, std::move(c)); }
        return f;
    }

    /// Canonical variable by slot: 0..n-1 are p_1..p_n, n..2n-1 are q^1..q^n.
    static Polynomial variable(std::size_t n, std::size_t slot) {
        if (slot >= 2 * n) { throw IndexError("Polynomial: variable slot out of range"); }
        Monomial m{std::vector<std::uint32_t>(2 * n, 0)};
        m.exp[slot] = 1;
        Polynomial f(n);
        f.terms_.emplace(std::move(m), Rational(1));
        return f;
    }

    /// p_i, 1-based as in the usual subscripts.
    static Polynomial p(std::size_t n, std::size_t i) {
        if (i < 1 || i > n) { throw IndexError("Polynomial: p index out of range"); }
        return variable(n, i - 1);
    }

    /// q^j, 1-based.
    static Polynomial q(std::size_t n, std::size_t j) {
        if (j < 1 || j > n) { throw IndexError("Polynomial: q index out of range"); }
        return variable(n, n + j - 1);
    }

    static Polynomial monomial(std::size_t n, std::vector<std::uint32_t> exps, Rational c) {
        if (exps.size() != 2 * n) { throw DimensionError("Polynomial: exponent vector has wrong length"); }
        Polynomial f(n);
        if (!c.is_zero()) { f.terms_.emplace(Monomial{std::move(exps)}, std::move(c)); }
        return f;
    }

    std::size_t n() const { return n_; }
    std::size_t var_count() const { return 2 * n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap &terms() const { return terms_; }

    void add_term(const Monomial &m, const Rational &c) {
        if (c.is_zero()) { return; }
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) { terms_.erase(it); }
    }

    Polynomial &operator+=(const Polynomial &o) {
        require_same_plane(o);
        for (const auto &[m, c] : o.terms_) { add_term(m, c); }
        return *this;
    }

    Polynomial &operator-=(const Polynomial &o) {
        require_same_plane(o);
        for (const auto &[m, c] : o.terms_) { add_term(m, -c); }
        return *this;
    }

    Polynomial operator-() const {
        Polynomial r(n_);
        for (const auto &[m, c] : terms_) { r.terms_.emplace(m, -c); }
        return r;
    }

    Polynomial &operator*=(const Rational &s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto &[m, c] : terms_) { c *= s; }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational &s) { return a *= s; }
    friend Polynomial operator*(const Rational &s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
        a.require_same_plane(b);
        Polynomial r(a.n_);
        for (const auto &[ma, ca] : a.terms_) {
            for (const auto &[mb, cb] : b.terms_) {
                Monomial m = ma;
                for (std::size_t k = 0; k < m.exp.size(); ++k) { m.exp[k] += mb.exp[k]; }
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const Polynomial &a, const Polynomial &b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial &a, const Polynomial &b) { return !(a == b); }

    /// Formal partial derivative with respect to the variable in `slot`.
    Polynomial partial(std::size_t slot) const {
        if (slot >= 2 * n_) { throw IndexError("Polynomial: partial slot out of range"); }
        Polynomial r(n_);
        for (const auto &[m, c] : terms_) {
            if (m.exp[slot] == 0) { continue; }
            Monomial d = m;
            const Rational factor = c * Rational(static_cast<long long>(d.exp[slot]));
            d.exp[slot] -= 1;
            r.add_term(d, factor);
        }
        return r;
    }

    /// Coefficient of a monomial (zero when absent).
    Rational coeff(const Monomial &m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    PolyBidegree bidegree() const {
        if (terms_.empty()) { return PolyBidegree::zero(); }
        auto it = terms_.begin();
        const long p = static_cast<long>(it->first.p_degree());
        const long q = static_cast<long>(it->first.q_degree());
        for (++it; it != terms_.end(); ++it) {
            if (static_cast<long>(it->first.p_degree()) != p ||
                static_cast<long>(it->first.q_degree()) != q) {
                return PolyBidegree::mixed();
            }
        }
        return PolyBidegree::homogeneous(p, q);
    }

    bool is_homogeneous_of_total_degree(std::size_t d) const {
        for (const auto &[m, c] : terms_) {
            if (m.total_degree() != d) { return false; }
        }
        return !terms_.empty();
    }

    /// The constant value of a degree-0 polynomial (also accepts zero).
    Rational constant_value() const {
        if (terms_.empty()) { return Rational(0); }
        if (terms_.size() != 1 || terms_.begin()->first.total_degree() != 0) {
            throw DegreeError("Polynomial: not a constant");
        }
        return terms_.begin()->second;
    }

    /// Substitutes every variable by the given polynomial (images[slot]).
    /// Used for linear canonical coordinate changes, but works generally.
    Polynomial substitute(const std::vector<Polynomial> &images) const {
        if (images.size() != 2 * n_) { throw DimensionError("Polynomial: substitution image count mismatch"); }
        for (const auto &g : images) {
            if (g.n_ != images[0].n_) { throw DimensionError("Polynomial: substitution images on mixed planes"); }
        }
        const std::size_t target_n = images.empty() ? n_ : images[0].n_;
        Polynomial r(target_n);
        for (const auto &[m, c] : terms_) {
            Polynomial term = Polynomial::constant(target_n, c);
            for (std::size_t slot = 0; slot < m.exp.size(); ++slot) {
                for (std::uint32_t e = 0; e < m.exp[slot]; ++e) { term = term * images[slot]; }
            }
            r += term;
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) { return "0"; }
        std::ostringstream os;
        bool first = true;
        for (const auto &[m, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a.sign() < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) { a = -a; }
            }
            first = false;
            bool printed = false;
            if (!(a == Rational(1)) || m.total_degree() == 0) {
                os << a.str();
                printed = true;
            }
            for (std::size_t slot = 0; slot < m.exp.size(); ++slot) {
                if (m.exp[slot] == 0) { continue; }
                if (printed) { os << "*"; }
                if (slot < n_) {
                    os << "p" << (slot + 1);
                } else {
                    os << "q" << (slot - n_ + 1);
                }
                if (m.exp[slot] > 1) { os << "^" << m.exp[slot]; }
                printed = true;
            }
        }
        return os.str();
    }

    friend std::ostream &operator<<(std::ostream &os, const Polynomial &f) { return os << f.str(); }

    void require_same_plane(const Polynomial &o) const {
        if (n_ != o.n_) { throw DimensionError("Polynomial: operands on planes of different half-dimension"); }
    }

  private:
    std::size_t n_ = 0;
    TermMap terms_;
};

/// Canonical Poisson bracket
///   {f, g} = sum_i (df/dp_i dg/dq^i - df/dq^i dg/dp_i),
/// normalized so that {p_i, q^j} = delta_i^j.
inline Polynomial poisson(const Polynomial &f, const Polynomial &g) {
    f.require_same_plane(g);
    const std::size_t n = f.n();
    Polynomial r(n);
    for (std::size_t i = 0; i < n; ++i) {
        r += f.partial(i) * g.partial(n + i);
        r -= f.partial(n + i) * g.partial(i);
    }
    return r;
}

inline Polynomial poly_mul(const Polynomial &f, const Polynomial &g) { return f * g; }

inline PolyBidegree bidegree(const Polynomial &f) { return f.bidegree(); }

inline Polynomial partial(const Polynomial &f, std::size_t slot) { return f.partial(slot); }

/// True when f is homogeneous linear (an element of W = V + V*); zero counts.
inline bool is_linear(const Polynomial &f) {
    for (const auto &[m, c] : f.terms()) {
        if (m.total_degree() != 1) { return false; }
    }
    return true;
}

/// Coefficient vector of a linear polynomial over the 2n variable slots.
inline std::vector<Rational> linear_coefficients(const Polynomial &f) {
    if (!is_linear(f)) { throw DegreeError("linear_coefficients: polynomial is not linear"); }
    std::vector<Rational> coeffs(2 * f.n());
    for (const auto &[m, c] : f.terms()) {
        for (std::size_t slot = 0; slot < m.exp.size(); ++slot) {
            if (m.exp[slot] == 1) { coeffs[slot] = c; }
        }
    }
    return coeffs;
}

/// Linear polynomial from a coefficient vector over the 2n slots.
inline Polynomial linear_from_coefficients(std::size_t n, const std::vector<Rational> &coeffs) {
    if (coeffs.size() != 2 * n) { throw DimensionError("linear_from_coefficients: coefficient count mismatch"); }
    Polynomial f(n);
    for (std::size_t slot = 0; slot < coeffs.size(); ++slot) {
        f += coeffs[slot] * Polynomial::variable(n, slot);
    }
    return f;
}

} // namespace loday
