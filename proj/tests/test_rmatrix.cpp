#include <catch2/catch_amalgamated.hpp>

#include "loday/doubles.hpp"
#include "loday/rmatrix.hpp"

#include "helpers.hpp"

using namespace loday;

namespace {
Polynomial p(std::size_t n, std::size_t i) { return Polynomial::p(n, i); }
Polynomial q(std::size_t n, std::size_t j) { return Polynomial::q(n, j); }

RMatrix sl2_killing_inverse() {
    return RMatrix(3, killing_form(testutil::make_sl2()).inverse());
}

/// Projection r-matrix of the omni algebra for dim V = 2: the dual-basis
/// covector of E_ab maps to -E_ba, the vector block maps to zero.
RMatrix omni2_projection() {
    RationalMatrix m(6, 6);
    m.at(0, 0) = Rational(-1);
    m.at(1, 2) = Rational(-1);
    m.at(2, 1) = Rational(-1);
    m.at(3, 3) = Rational(-1);
    return RMatrix(6, m);
}
} // namespace

TEST_CASE("anti-triangularity") {
    testutil::Rng rng(199);
    for (int t = 0; t < 10; ++t) {
        const RMatrix sym(3, testutil::random_symmetric_matrix(rng, 3));
        CHECK(is_anti_triangular(sym));
    }
    RationalMatrix skew(2, 2);
    skew.at(0, 1) = Rational(1);
    skew.at(1, 0) = Rational(-1);
    CHECK_FALSE(is_anti_triangular(RMatrix(2, skew)));
    CHECK(is_anti_triangular(sl2_killing_inverse())); // the Killing pairing is symmetric
    CHECK(is_anti_triangular(omni2_projection()));
}

TEST_CASE("hamiltonian representation of anti-triangular operators") {
    SECTION("zero matrix") { CHECK(r_to_hamiltonian(RMatrix::zero(3)).is_zero()); }
    SECTION("unit 1x1 matrix maps q1 to p1 and kills p1") {
        RationalMatrix m(1, 1);
        m.at(0, 0) = Rational(1);
        const VectorField h = r_to_hamiltonian(RMatrix(1, m));
        CHECK(h.apply(q(1, 1)) == p(1, 1));
        CHECK(h.apply(p(1, 1)).is_zero());
    }
    SECTION("bidegree is (1,-1) and the field agrees with the hat extension") {
        testutil::Rng rng(211);
        for (int t = 0; t < 10; ++t) {
            const RMatrix r(3, testutil::random_symmetric_matrix(rng, 3));
            const VectorField h = r_to_hamiltonian(r);
            if (h.is_zero()) { continue; }
            CHECK(field_bidegree(h) == FieldBidegree::homogeneous(1, -1));
            const std::size_t w = 6;
            for (std::size_t a = 0; a < w; ++a) {
                std::vector<Rational> unit(w);
                unit[a] = Rational(1);
                const auto image = r.hat(unit);
                const Polynomial viaf = h.apply(Polynomial::variable(3, a));
                const auto coeffs =
                    viaf.is_zero() ? std::vector<Rational>(w) : linear_coefficients(viaf);
                for (std::size_t s = 0; s < w; ++s) { CHECK(coeffs[s] == image[s]); }
            }
        }
    }
    SECTION("non-symmetric operators are rejected") {
        RationalMatrix m(2, 2);
        m.at(0, 1) = Rational(1);
        CHECK_THROWS_AS(r_to_hamiltonian(RMatrix(2, m)), PreconditionError);
    }
}

TEST_CASE("lybe") {
    SECTION("zero solves every LYBE") {
        CHECK(lybe_check(testutil::make_heis(), RMatrix::zero(2)).ok);
        CHECK(lybe_check(testutil::make_sl2(), RMatrix::zero(3)).ok);
    }
    SECTION("the inverse Killing pairing solves LYBE on sl2") {
        const auto res = lybe_check(testutil::make_sl2(), sl2_killing_inverse());
        CHECK(res.ok);
        CHECK(res.graph_route_agrees);
        CHECK(res.lie_reduction_agrees);
    }
    SECTION("the omni projection solves LYBE on dim V = 2") {
        const auto res = lybe_check(omni_lie(2), omni2_projection());
        CHECK(res.ok);
        CHECK(res.graph_route_agrees);
    }
    SECTION("a non-solution reports a witness") {
        RationalMatrix m = RationalMatrix::identity(3);
        const auto res = lybe_check(testutil::make_sl2(), RMatrix(3, m));
        CHECK_FALSE(res.ok);
        CHECK_FALSE(res.defect.empty());
        CHECK(res.graph_route_agrees); // the two formulations always agree
    }
    SECTION("dimension mismatches are typed errors") {
        CHECK_THROWS_AS(lybe_check(testutil::make_sl2(), RMatrix::zero(2)), DimensionError);
    }
}

TEST_CASE("hh identity") {
    const StructureField sl2_field = structure_field(testutil::make_sl2());
    SECTION("zero generator") {
        const auto res = hh_check(sl2_field, VectorField::zero(3));
        CHECK(res.identity_holds);
        CHECK(res.bracket_vanishes);
    }
    SECTION("killing solution: bracket vanishes") {
        const auto res = hh_check(sl2_field, r_to_hamiltonian(sl2_killing_inverse()));
        CHECK(res.identity_holds);
        CHECK(res.bracket_vanishes);
    }
    SECTION("random symmetric operators satisfy the identity, solution or not") {
        testutil::Rng rng(223);
        const StructureField heis_field = structure_field(testutil::make_heis());
        for (int t = 0; t < 10; ++t) {
            const RMatrix r2(2, testutil::random_symmetric_matrix(rng, 2));
            const auto res2 = hh_check(heis_field, r_to_hamiltonian(r2));
            CHECK(res2.identity_holds);
            const RMatrix r3(3, testutil::random_symmetric_matrix(rng, 3));
            const auto res3 = hh_check(sl2_field, r_to_hamiltonian(r3));
            CHECK(res3.identity_holds);
        }
    }
    SECTION("wrong bidegrees are rejected") {
        CHECK_THROWS_AS(hh_check(sl2_field, hamiltonian(p(3, 1) * q(3, 1))), PreconditionError);
    }
}

TEST_CASE("flow transform") {
    const StructureField l = structure_field(testutil::make_sl2());
    SECTION("zero generator returns the field") {
        CHECK(flow_transform(l, VectorField::zero(3)) == l);
    }
    SECTION("a LYBE solution produces a canonical double in one step") {
        const VectorField h = r_to_hamiltonian(sl2_killing_inverse());
        const StructureField flowed = flow_transform(l, h);
        CHECK(is_leibniz_field(flowed));
        CHECK(flowed.field() == l.field() + commutator(l.field(), h));
        // the flowed field factorizes over the coordinate pair
        const auto pair = is_canonical_pair(flowed, v_subspace(3), v_star_subspace(3));
        CHECK(pair.ok());
        // bidegree components match: (0,1) part L, (1,0) part [L,H], rest zero
        const auto parts = bidegree_decompose(flowed);
        CHECK(parts.l == l.field());
        CHECK(parts.l_star == commutator(l.field(), h));
        CHECK(parts.phi.is_zero());
        CHECK(parts.phi_star.is_zero());
    }
    SECTION("non-solutions still flow to Leibniz fields") {
        testutil::Rng rng(227);
        for (int t = 0; t < 5; ++t) {
            const RMatrix r(3, testutil::random_symmetric_matrix(rng, 3));
            const StructureField flowed = flow_transform(l, r_to_hamiltonian(r));
            CHECK(is_leibniz_field(flowed));
            // third-order term identity: (1/3!)[[[L,H],H],H] evaluated against
            // the Hamiltonian-squared correction H{L H(l1), H(l2)}
            const VectorField h = r_to_hamiltonian(r);
            const VectorField t3 =
                commutator(commutator(commutator(l.field(), h), h), h);
            const auto basis = plane_basis(3);
            for (std::size_t a = 0; a < 6; ++a) {
                for (std::size_t b = 0; b < 6; ++b) {
                    const Polynomial lhs = Rational(1, 6) * poisson(t3.apply(basis[a]), basis[b]);
                    const Polynomial rhs =
                        h.apply(poisson(l.apply(h.apply(basis[a])), h.apply(basis[b])));
                    CHECK(lhs == rhs);
                }
            }
            // order four vanishes automatically
            CHECK(commutator(t3, h).is_zero());
        }
    }
    SECTION("flow commutes with psi order by order") {
        testutil::Rng rng(229);
        for (int t = 0; t < 5; ++t) {
            const RMatrix r(3, testutil::random_symmetric_matrix(rng, 3));
            const VectorField h = r_to_hamiltonian(r);
            const StructureField flowed = flow_transform(l, h);
            // cochain-level exponential of psi_L along psi_H
            const Cochain psih = psi_with_degree(h, 0);
            Cochain term = psi(l);
            Cochain total = term;
            Rational factor(1);
            for (unsigned k = 1; k <= 4; ++k) {
                term = graded_bracket(term, psih);
                if (term.is_zero()) { break; }
                total += inverse_factorial(k) * term;
            }
            CHECK(total == psi(flowed));
        }
    }
    SECTION("bidegree (-1,1) generators are accepted") {
        // H = hamiltonian of a symmetric quadratic in q has bidegree (-1,1)
        testutil::Rng rng(233);
        const RationalMatrix s = testutil::random_symmetric_matrix(rng, 2);
        Polynomial h(2);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                h += Rational(1, 2) * s.at(i, j) * (q(2, i + 1) * q(2, j + 1));
            }
        }
        const VectorField hf = hamiltonian(h);
        if (!hf.is_zero()) {
            REQUIRE(field_bidegree(hf) == FieldBidegree::homogeneous(-1, 1));
            const StructureField heis_l = structure_field(testutil::make_heis());
            const StructureField flowed = flow_transform(heis_l, hf);
            CHECK(is_leibniz_field(flowed));
        }
    }
    SECTION("non-Leibniz inputs are rejected") {
        VectorField first_term(2);
        first_term.component(0) = -(p(2, 2) * q(2, 1));
        CHECK_THROWS_AS(flow_transform(StructureField(first_term), VectorField::zero(2)),
                        PreconditionError);
    }
}

TEST_CASE("graphs of operators are lagrangian exactly when anti-triangular") {
    testutil::Rng rng(239);
    const std::size_t n = 3;
    for (int t = 0; t < 10; ++t) {
        RationalMatrix m = testutil::random_matrix(rng, n, n);
        const RMatrix r(n, m);
        // graph basis: r(q^a) + q^a
        std::vector<Polynomial> basis;
        for (std::size_t a = 0; a < n; ++a) {
            Polynomial l = q(n, a + 1);
            for (std::size_t b = 0; b < n; ++b) { l += m.at(a, b) * p(n, b + 1); }
            basis.push_back(l);
        }
        CHECK(is_lagrangian(Subspace(n, basis)) == is_anti_triangular(r));
    }
}
