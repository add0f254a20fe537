#pragma once

#include <cstddef>
#include <vector>

#include "loday/error.hpp"
#include "loday/rational.hpp"

namespace loday {

/*
 * The cochain complex of multilinear maps on a vector space: a cochain of
 * arity m is a map V^{(x)m} -> V, stored densely as the coefficient tensor
 * T^k_{i1..im} over a chosen basis. The cochain degree of arity m is m-1.
 *
 * compose_bar is the order-preserving insertion sum: for arities m and n the
 * result has arity m+n-1 and one signed term per increasing n-subset
 * sigma(1) < ... < sigma(n) of {1..m+n-1}. N consumes the arguments indexed
 * by sigma; its value lands in slot sigma(n)-n+1 of M, preceded by the
 * remaining arguments below sigma(n) in increasing order and followed by the
 * arguments above sigma(n). The Koszul sign of a term is
 *
 *     (-1)^{ sum_{a<n} (sigma(a) - a) },
 *
 * the signature of the unshuffle pulling sigma(1..n-1) to the front. The
 * convention is pinned by three independent oracles in the test suite: the
 * frozen ten-term (m,n) = (4,2) expansion, the equivalence of the
 * Maurer-Cartan condition with the brute-force Leibniz identity on fixture
 * algebras, and the graded antisymmetry/Jacobi property checks.
 */

inline constexpr std::size_t kDefaultArityCap = 5;

class Cochain {
  public:
    Cochain() = default;

    /// Zero cochain of the given arity on a dim-dimensional space.
    Cochain(std::size_t dim, std::size_t arity, std::size_t cap = kDefaultArityCap)
      : dim_(dim)
      , arity_(arity) {
        if (arity_ < 1) { throw ArityError("Cochain: arity must be at least 1"); }
        if (arity_ > cap) { throw ArityError("Cochain: arity exceeds the configured cap"); }
        std::size_t size = dim_;
        for (std::size_t i = 0; i < arity_; ++i) { size *= dim_; }
        coeffs_.assign(size, Rational(0));
    }

    static Cochain identity(std::size_t dim) {
        Cochain c(dim, 1);
        for (std::size_t i = 0; i < dim; ++i) { c.at({i}, i) = Rational(1); }
        return c;
    }

    std::size_t dim() const { return dim_; }
    std::size_t arity() const { return arity_; }
    long degree() const { return static_cast<long>(arity_) - 1; }

    /// Coefficient of basis vector k in the value on the basis tuple.
    Rational &at(const std::vector<std::size_t> &tuple, std::size_t k) {
        return coeffs_[flat(tuple, k)];
    }
    const Rational &at(const std::vector<std::size_t> &tuple, std::size_t k) const {
        return coeffs_[flat(tuple, k)];
    }

    bool is_zero() const {
        for (const auto &c : coeffs_) {
            if (!c.is_zero()) { return false; }
        }
        return true;
    }

    /// Value on a tuple of coordinate vectors, by multilinearity.
    std::vector<Rational> evaluate(const std::vector<std::vector<Rational>> &args) const {
        if (args.size() != arity_) { throw ArityError("Cochain: wrong number of arguments"); }
        for (const auto &a : args) {
            if (a.size() != dim_) { throw DimensionError("Cochain: argument has wrong dimension"); }
        }
        std::vector<Rational> out(dim_);
        std::vector<std::size_t> tuple(arity_, 0);
        while (true) {
            Rational weight(1);
            for (std::size_t j = 0; j < arity_ && !weight.is_zero(); ++j) { weight *= args[j][tuple[j]]; }
            if (!weight.is_zero()) {
                for (std::size_t k = 0; k < dim_; ++k) {
                    const Rational &c = at(tuple, k);
                    if (!c.is_zero()) { out[k] += weight * c; }
                }
            }
            if (!advance(tuple)) { break; }
        }
        return out;
    }

    Cochain &operator+=(const Cochain &o) {
        require_compatible(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) { coeffs_[i] += o.coeffs_[i]; }
        return *this;
    }
    Cochain &operator-=(const Cochain &o) {
        require_compatible(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) { coeffs_[i] -= o.coeffs_[i]; }
        return *this;
    }
    Cochain &operator*=(const Rational &s) {
        for (auto &c : coeffs_) { c *= s; }
        return *this;
    }
    Cochain operator-() const {
        Cochain r = *this;
        for (auto &c : r.coeffs_) { c = -c; }
        return r;
    }
    friend Cochain operator+(Cochain a, const Cochain &b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain &b) { return a -= b; }
    friend Cochain operator*(const Rational &s, Cochain a) { return a *= s; }

    friend bool operator==(const Cochain &a, const Cochain &b) {
        return a.dim_ == b.dim_ && a.arity_ == b.arity_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Cochain &a, const Cochain &b) { return !(a == b); }

    /// Advances a basis tuple in row-major order; false after the last one.
    bool advance(std::vector<std::size_t> &tuple) const {
        for (std::size_t j = tuple.size(); j-- > 0;) {
            if (++tuple[j] < dim_) { return true; }
            tuple[j] = 0;
        }
        return false;
    }

    void require_compatible(const Cochain &o) const {
        if (dim_ != o.dim_) { throw DimensionError("Cochain: operands on spaces of different dimension"); }
        if (arity_ != o.arity_) { throw ArityError("Cochain: operands of different arity"); }
    }

  private:
    std::size_t flat(const std::vector<std::size_t> &tuple, std::size_t k) const {
        if (tuple.size() != arity_) { throw ArityError("Cochain: tuple has wrong arity"); }
        std::size_t idx = 0;
        for (std::size_t j = 0; j < arity_; ++j) {
            if (tuple[j] >= dim_) { throw IndexError("Cochain: basis index out of range"); }
            idx = idx * dim_ + tuple[j];
        }
        if (k >= dim_) { throw IndexError("Cochain: output index out of range"); }
        return idx * dim_ + k;
    }

    std::size_t dim_ = 0;
    std::size_t arity_ = 0;
    std::vector<Rational> coeffs_;
};

/// Next k-combination of {0..total-1} in lexicographic order.
inline bool next_combination(std::vector<std::size_t> &c, std::size_t total) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < total - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) { c[j] = c[j - 1] + 1; }
            return true;
        }
    }
    return false;
}

/// M composed-over N (the insertion sum described above).
inline Cochain compose_bar(const Cochain &m, const Cochain &n, std::size_t cap = kDefaultArityCap) {
    if (m.dim() != n.dim()) { throw DimensionError("compose_bar: cochains on spaces of different dimension"); }
    const std::size_t am = m.arity();
    const std::size_t an = n.arity();
    const std::size_t ar = am + an - 1;
    if (ar > cap) { throw ArityError("compose_bar: result arity exceeds the configured cap"); }
    const std::size_t dim = m.dim();
    Cochain result(dim, ar, cap);

    // increasing n-subsets of {0..ar-1}
    std::vector<std::size_t> subset(an);
    for (std::size_t j = 0; j < an; ++j) { subset[j] = j; }
    do {
        // Koszul sign from the positions of all but the last of N's arguments
        long excess = 0;
        for (std::size_t a = 0; a + 1 < an; ++a) { excess += static_cast<long>(subset[a] - a); }
        const Rational sign = (excess % 2 == 0) ? Rational(1) : Rational(-1);

        // argument layout of M: positions below subset[an-1] and not in the
        // subset, then the insertion slot, then the tail
        std::vector<std::size_t> positions;
        positions.reserve(am);
        std::vector<bool> taken(ar, false);
        for (std::size_t j = 0; j < an; ++j) { taken[subset[j]] = true; }
        for (std::size_t pos = 0; pos < subset[an - 1]; ++pos) {
            if (!taken[pos]) { positions.push_back(pos); }
        }
        const std::size_t insert_slot = positions.size();
        positions.push_back(ar); // placeholder for the N value
        for (std::size_t pos = subset[an - 1] + 1; pos < ar; ++pos) { positions.push_back(pos); }

        std::vector<std::size_t> tuple(ar, 0);
        std::vector<std::size_t> n_tuple(an, 0);
        std::vector<std::size_t> m_tuple(am, 0);
        do {
            for (std::size_t j = 0; j < an; ++j) { n_tuple[j] = tuple[subset[j]]; }
            for (std::size_t j = 0; j < am; ++j) {
                if (j != insert_slot) { m_tuple[j] = tuple[positions[j]]; }
            }
            for (std::size_t s = 0; s < dim; ++s) {
                const Rational &nc = n.at(n_tuple, s);
                if (nc.is_zero()) { continue; }
                m_tuple[insert_slot] = s;
                for (std::size_t k = 0; k < dim; ++k) {
                    const Rational &mc = m.at(m_tuple, k);
                    if (mc.is_zero()) { continue; }
                    result.at(tuple, k) += sign * nc * mc;
                }
            }
        } while (result.advance(tuple));
    } while (next_combination(subset, ar));
    return result;
}

/// Graded bracket [[M, N]] = M comp N - (-1)^{(m-1)(n-1)} N comp M.
inline Cochain graded_bracket(const Cochain &m, const Cochain &n, std::size_t cap = kDefaultArityCap) {
    Cochain a = compose_bar(m, n, cap);
    Cochain b = compose_bar(n, m, cap);
    const long sign = ((m.arity() - 1) * (n.arity() - 1)) % 2 == 0 ? 1 : -1;
    return sign == 1 ? a - b : a + b;
}

struct MaurerCartanResult {
    bool ok = false;
    Cochain defect; // [[mu, mu]], arity 3
};

/// A binary cochain is a Leibniz bracket exactly when [[mu, mu]] = 0.
inline MaurerCartanResult is_maurer_cartan(const Cochain &mu, std::size_t cap = kDefaultArityCap) {
    if (mu.arity() != 2) { throw ArityError("is_maurer_cartan: expected an arity-2 cochain"); }
    MaurerCartanResult r;
    r.defect = graded_bracket(mu, mu, cap);
    r.ok = r.defect.is_zero();
    return r;
}

/// Leibniz cohomology differential d_mu = [[mu, -]].
inline Cochain differential(const Cochain &mu, const Cochain &m, std::size_t cap = kDefaultArityCap) {
    if (!is_maurer_cartan(mu, cap).ok) {
        throw PreconditionError("differential: mu is not a Maurer-Cartan element");
    }
    return graded_bracket(mu, m, cap);
}

} // namespace loday
