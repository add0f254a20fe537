#pragma once

// Shared fixtures and deterministic generators for the test suites. All
// expected values asserted in the tests are either trivial, hand-expanded,
// or produced by the independent oracles below; none are reproduced from
// the implementation under test.

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "loday/cochain.hpp"
#include "loday/leibniz_algebra.hpp"
#include "loday/polynomial.hpp"
#include "loday/ratmat.hpp"
#include "loday/vector_field.hpp"

namespace testutil {

using namespace loday;

inline LeibnizAlgebra make_heis() {
    LeibnizAlgebra a(2, "heis");
    a.c(0, 0, 1) = Rational(1);
    return a;
}

inline LeibnizAlgebra make_sl2() {
    LeibnizAlgebra a(3, "sl2"); // basis (h, e, f)
    a.c(0, 1, 1) = Rational(2);
    a.c(1, 0, 1) = Rational(-2);
    a.c(0, 2, 2) = Rational(-2);
    a.c(2, 0, 2) = Rational(2);
    a.c(1, 2, 0) = Rational(1);
    a.c(2, 1, 0) = Rational(-1);
    return a;
}

inline LeibnizAlgebra make_so3() {
    LeibnizAlgebra a(3, "so3");
    a.c(0, 1, 2) = Rational(1);
    a.c(1, 0, 2) = Rational(-1);
    a.c(1, 2, 0) = Rational(1);
    a.c(2, 1, 0) = Rational(-1);
    a.c(2, 0, 1) = Rational(1);
    a.c(0, 2, 1) = Rational(-1);
    return a;
}

inline LeibnizAlgebra make_abelian(std::size_t d) { return LeibnizAlgebra(d, "abelian"); }

inline LeibnizAlgebra make_bad() {
    LeibnizAlgebra a(1, "bad");
    a.c(0, 0, 0) = Rational(1);
    return a;
}

using Rng = std::mt19937;

inline Rational random_rational(Rng &rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(Rng &rng) {
    Rational r = random_rational(rng);
    while (r.is_zero()) { r = random_rational(rng); }
    return r;
}

inline Monomial random_monomial(Rng &rng, std::size_t n, std::size_t max_total_degree) {
    std::uniform_int_distribution<std::size_t> deg(0, max_total_degree);
    std::uniform_int_distribution<std::size_t> slot(0, 2 * n - 1);
    Monomial m{std::vector<std::uint32_t>(2 * n, 0)};
    const std::size_t d = deg(rng);
    for (std::size_t i = 0; i < d; ++i) { m.exp[slot(rng)] += 1; }
    return m;
}

inline Polynomial random_polynomial(Rng &rng, std::size_t n, std::size_t max_total_degree,
                                    std::size_t terms = 4) {
    Polynomial f(n);
    for (std::size_t t = 0; t < terms; ++t) {
        f += Polynomial::monomial(n, random_monomial(rng, n, max_total_degree).exp, random_rational(rng));
    }
    return f;
}

/// Random homogeneous polynomial of the exact bidegree (dp, dq).
inline Polynomial random_homogeneous(Rng &rng, std::size_t n, std::size_t dp, std::size_t dq,
                                     std::size_t terms = 3) {
    std::uniform_int_distribution<std::size_t> pslot(0, n - 1);
    Polynomial f(n);
    for (std::size_t t = 0; t < terms; ++t) {
        Monomial m{std::vector<std::uint32_t>(2 * n, 0)};
        for (std::size_t i = 0; i < dp; ++i) { m.exp[pslot(rng)] += 1; }
        for (std::size_t i = 0; i < dq; ++i) { m.exp[n + pslot(rng)] += 1; }
        f += Polynomial::monomial(n, m.exp, random_rational(rng));
    }
    return f;
}

inline Polynomial random_quadratic(Rng &rng, std::size_t n) {
    Polynomial f(n);
    f += random_homogeneous(rng, n, 2, 0, 2);
    f += random_homogeneous(rng, n, 1, 1, 2);
    f += random_homogeneous(rng, n, 0, 2, 2);
    return f;
}

inline Polynomial random_cubic(Rng &rng, std::size_t n) {
    Polynomial f(n);
    for (std::size_t dp = 0; dp <= 3; ++dp) { f += random_homogeneous(rng, n, dp, 3 - dp, 2); }
    return f;
}

/// Random field of polynomial degree +1 (quadratic components).
inline VectorField random_degree1_field(Rng &rng, std::size_t n) {
    VectorField x(n);
    for (std::size_t a = 0; a < 2 * n; ++a) { x.component(a) = random_quadratic(rng, n); }
    return x;
}

inline Cochain random_cochain(Rng &rng, std::size_t dim, std::size_t arity) {
    Cochain c(dim, arity);
    std::vector<std::size_t> tuple(arity, 0);
    while (true) {
        for (std::size_t k = 0; k < dim; ++k) { c.at(tuple, k) = random_rational(rng); }
        if (!c.advance(tuple)) { break; }
    }
    return c;
}

inline RationalMatrix random_matrix(Rng &rng, std::size_t rows, std::size_t cols) {
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) { m.at(i, j) = random_rational(rng); }
    }
    return m;
}

inline RationalMatrix random_symmetric_matrix(Rng &rng, std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const Rational r = random_rational(rng);
            m.at(i, j) = r;
            m.at(j, i) = r;
        }
    }
    return m;
}

/// Independent oracle for the composition of an arity-4 M with an arity-2 N:
/// the ten-term signed expansion, frozen literally term by term.
inline Cochain ten_term_expansion(const Cochain &m, const Cochain &n) {
    struct Term {
        int sign;
        std::size_t na, nb;          // 1-based argument positions fed to N
        std::array<std::size_t, 4> slots; // 1-based positions fed to M; 0 marks N's value
    };
    static const Term kTerms[10] = {
        {+1, 1, 2, {0, 3, 4, 5}}, // +M(N(v1,v2),v3,v4,v5)
        {+1, 1, 3, {2, 0, 4, 5}}, // +M(v2,N(v1,v3),v4,v5)
        {-1, 2, 3, {1, 0, 4, 5}}, // -M(v1,N(v2,v3),v4,v5)
        {+1, 1, 4, {2, 3, 0, 5}}, // +M(v2,v3,N(v1,v4),v5)
        {-1, 2, 4, {1, 3, 0, 5}}, // -M(v1,v3,N(v2,v4),v5)
        {+1, 3, 4, {1, 2, 0, 5}}, // +M(v1,v2,N(v3,v4),v5)
        {+1, 1, 5, {2, 3, 4, 0}}, // +M(v2,v3,v4,N(v1,v5))
        {-1, 2, 5, {1, 3, 4, 0}}, // -M(v1,v3,v4,N(v2,v5))
        {+1, 3, 5, {1, 2, 4, 0}}, // +M(v1,v2,v4,N(v3,v5))
        {-1, 4, 5, {1, 2, 3, 0}}, // -M(v1,v2,v3,N(v4,v5))
    };
    const std::size_t dim = m.dim();
    Cochain out(dim, 5);
    std::vector<std::size_t> tuple(5, 0);
    while (true) {
        for (const auto &term : kTerms) {
            for (std::size_t s = 0; s < dim; ++s) {
                const Rational &nc = n.at({tuple[term.na - 1], tuple[term.nb - 1]}, s);
                if (nc.is_zero()) { continue; }
                std::vector<std::size_t> margs(4);
                for (std::size_t j = 0; j < 4; ++j) {
                    margs[j] = term.slots[j] == 0 ? s : tuple[term.slots[j] - 1];
                }
                for (std::size_t k = 0; k < dim; ++k) {
                    const Rational &mc = m.at(margs, k);
                    if (mc.is_zero()) { continue; }
                    out.at(tuple, k) += Rational(term.sign) * nc * mc;
                }
            }
        }
        bool carried = false;
        for (std::size_t j = tuple.size(); j-- > 0;) {
            if (++tuple[j] < dim) {
                carried = true;
                break;
            }
            tuple[j] = 0;
        }
        if (!carried) { break; }
    }
    return out;
}

/// Independent oracle: the Leibniz identity of an arity-2 cochain by the
/// direct triple loop, with no reference to the graded bracket.
inline bool cochain_leibniz_identity(const Cochain &mu) {
    const std::size_t d = mu.dim();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                for (std::size_t l = 0; l < d; ++l) {
                    Rational defect(0);
                    for (std::size_t m = 0; m < d; ++m) {
                        defect += mu.at({j, k}, m) * mu.at({i, m}, l); // [e_i, [e_j, e_k]]
                        defect -= mu.at({i, j}, m) * mu.at({m, k}, l); // [[e_i, e_j], e_k]
                        defect -= mu.at({i, k}, m) * mu.at({j, m}, l); // [e_j, [e_i, e_k]]
                    }
                    if (!defect.is_zero()) { return false; }
                }
            }
        }
    }
    return true;
}

} // namespace testutil
