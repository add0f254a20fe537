#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "loday/cochain.hpp"
#include "loday/error.hpp"
#include "loday/rational.hpp"

namespace loday {

/// Finite-dimensional algebra given by structure constants C^k_ij, so that
/// [e_i, e_j] = sum_k C^k_ij e_k. Whether the bracket actually satisfies the
/// Leibniz identity is checked, never assumed.
class LeibnizAlgebra {
  public:
    LeibnizAlgebra() = default;

    LeibnizAlgebra(std::size_t dim, std::string name)
      : dim_(dim)
      , name_(std::move(name))
      , c_(dim * dim * dim, Rational(0)) {}

    std::size_t dim() const { return dim_; }
    const std::string &name() const { return name_; }

    /// C^k_ij, all indices 0-based.
    Rational &c(std::size_t i, std::size_t j, std::size_t k) { return c_[idx(i, j, k)]; }
    const Rational &c(std::size_t i, std::size_t j, std::size_t k) const { return c_[idx(i, j, k)]; }

    /// Coordinates of [e_i, e_j].
    std::vector<Rational> bracket(std::size_t i, std::size_t j) const {
        std::vector<Rational> out(dim_);
        for (std::size_t k = 0; k < dim_; ++k) { out[k] = c(i, j, k); }
        return out;
    }

    /// Bracket of two coordinate vectors, by bilinearity.
    std::vector<Rational> bracket(const std::vector<Rational> &x, const std::vector<Rational> &y) const {
        if (x.size() != dim_ || y.size() != dim_) { throw DimensionError("LeibnizAlgebra: bad coordinate vector"); }
        std::vector<Rational> out(dim_);
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) { continue; }
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) { continue; }
                const Rational w = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k) {
                    if (!c(i, j, k).is_zero()) { out[k] += w * c(i, j, k); }
                }
            }
        }
        return out;
    }

    bool is_antisymmetric() const {
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                for (std::size_t k = 0; k < dim_; ++k) {
                    if (c(i, j, k) != -c(j, i, k)) { return false; }
                }
            }
        }
        return true;
    }

    /// The bracket as an arity-2 cochain on the algebra itself.
    Cochain as_cochain() const {
        Cochain mu(dim_, 2);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j < dim_; ++j) {
                for (std::size_t k = 0; k < dim_; ++k) { mu.at({i, j}, k) = c(i, j, k); }
            }
        }
        return mu;
    }

    friend bool operator==(const LeibnizAlgebra &a, const LeibnizAlgebra &b) {
        return a.dim_ == b.dim_ && a.c_ == b.c_;
    }

  private:
    std::size_t idx(std::size_t i, std::size_t j, std::size_t k) const {
        if (i >= dim_ || j >= dim_ || k >= dim_) { throw IndexError("LeibnizAlgebra: basis index out of range"); }
        return (i * dim_ + j) * dim_ + k;
    }

    std::size_t dim_ = 0;
    std::string name_;
    std::vector<Rational> c_;
};

struct LeibnizCheckResult {
    bool ok = false;
    /// Failing triples (i,j,k), 0-based, with the defect coordinates of
    /// [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - [e_j,[e_i,e_k]].
    std::vector<std::array<std::size_t, 3>> failures;
    std::vector<std::vector<Rational>> defects;
};

inline std::vector<Rational> unitvec(std::size_t d, std::size_t i) {
    std::vector<Rational> v(d);
    v[i] = Rational(1);
    return v;
}

/// Brute-force Leibniz identity over all basis triples.
inline LeibnizCheckResult check_leibniz(const LeibnizAlgebra &a) {
    LeibnizCheckResult r;
    r.ok = true;
    const std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                std::vector<Rational> defect = a.bracket(a.bracket(i, j), unitvec(d, k));
                const auto jk = a.bracket(j, k);
                const auto ik = a.bracket(i, k);
                const auto lhs = a.bracket(unitvec(d, i), jk);
                const auto mid = a.bracket(unitvec(d, j), ik);
                bool bad = false;
                for (std::size_t s = 0; s < d; ++s) {
                    defect[s] = lhs[s] - defect[s] - mid[s];
                    if (!defect[s].is_zero()) { bad = true; }
                }
                if (bad) {
                    r.ok = false;
                    r.failures.push_back({i, j, k});
                    r.defects.push_back(std::move(defect));
                }
            }
        }
    }
    return r;
}

/// The omni-Lie algebra gl(V) + V of a v-dimensional space: dimension v^2+v,
/// bracket [f1+v1, f2+v2] = [f1,f2] + f1(v2). Basis ordering: E_11, E_12,
/// ..., E_vv row-major, then the vectors v_1..v_v.
inline LeibnizAlgebra omni_lie(std::size_t v) {
    if (v < 1) { throw PreconditionError("omni_lie: dimension must be at least 1"); }
    const std::size_t d = v * v + v;
    LeibnizAlgebra a(d, "omni" + std::to_string(v));
    auto e = [v](std::size_t row, std::size_t col) { return row * v + col; }; // index of E_{row,col}
    auto vec = [v](std::size_t i) { return v * v + i; };                      // index of v_i
    // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
    for (std::size_t aa = 0; aa < v; ++aa) {
        for (std::size_t b = 0; b < v; ++b) {
            for (std::size_t cc = 0; cc < v; ++cc) {
                for (std::size_t dd = 0; dd < v; ++dd) {
                    if (b == cc) { a.c(e(aa, b), e(cc, dd), e(aa, dd)) += Rational(1); }
                    if (dd == aa) { a.c(e(aa, b), e(cc, dd), e(cc, b)) -= Rational(1); }
                }
            }
        }
    }
    // [E_ab, v_c] = delta_bc v_a
    for (std::size_t aa = 0; aa < v; ++aa) {
        for (std::size_t b = 0; b < v; ++b) { a.c(e(aa, b), vec(b), vec(aa)) += Rational(1); }
    }
    return a;
}

} // namespace loday
