#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "loday/cochain.hpp"
#include "loday/error.hpp"
#include "loday/leibniz_algebra.hpp"
#include "loday/nijenhuis.hpp"
#include "loday/polynomial.hpp"
#include "loday/ratmat.hpp"
#include "loday/rmatrix.hpp"
#include "loday/subspace.hpp"
#include "loday/vector_field.hpp"

namespace loday {

/*
 * JSON schemas shared with the command-line tool. Rationals are always "a/b"
 * strings (never floats). Indices are 1-based on the wire, matching the
 * usual subscripts.
 *
 *   polynomial   [ {"coeff": "1/2", "exp": [e_1,...,e_2n]}, ... ]
 *   field        {"n": n, "dp": [poly x n], "dq": [poly x n]}
 *   algebra      {"name": str, "dim": d,
 *                 "bracket": [{"i": 1, "j": 1, "out": {"2": "1"}}, ...]}
 *   r-matrix     {"n": n, "r": [["a/b", ...], ...]}
 *   operator     {"n": n, "matrix": [[2n x 2n]], "h": poly (optional)}
 *   subspace     {"n": n, "basis": [[2n coefficients], ...]}
 */

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational &r) { return Json(r.str()); }

inline Rational rational_from_json(const Json &j) {
    if (!j.is_string()) { throw ParseError("expected a rational \"a/b\" string"); }
    return Rational::parse(j.get<std::string>());
}

inline Json to_json(const Polynomial &f) {
    Json terms = Json::array();
    for (const auto &[m, c] : f.terms()) {
        Json term;
        term["coeff"] = c.str();
        term["exp"] = m.exp;
        terms.push_back(std::move(term));
    }
    return terms;
}

inline Polynomial polynomial_from_json(const Json &j, std::size_t n) {
    if (!j.is_array()) { throw ParseError("polynomial: expected a list of terms"); }
    Polynomial f(n);
    for (const auto &term : j) {
        if (!term.contains("coeff") || !term.contains("exp")) {
            throw ParseError("polynomial: each term needs \"coeff\" and \"exp\"");
        }
        const Json &exp = term["exp"];
        if (!exp.is_array() || exp.size() != 2 * n) {
            throw ParseError("polynomial: \"exp\" must list all 2n exponents");
        }
        std::vector<std::uint32_t> exps;
        exps.reserve(2 * n);
        for (const auto &e : exp) {
            if (!e.is_number_unsigned()) { throw ParseError("polynomial: exponents must be non-negative integers"); }
            exps.push_back(e.get<std::uint32_t>());
        }
        f += Polynomial::monomial(n, std::move(exps), rational_from_json(term["coeff"]));
    }
    return f;
}

inline Json to_json(const VectorField &x) {
    Json j;
    j["n"] = x.n();
    Json dp = Json::array();
    Json dq = Json::array();
    for (std::size_t i = 0; i < x.n(); ++i) { dp.push_back(to_json(x.component(i))); }
    for (std::size_t i = 0; i < x.n(); ++i) { dq.push_back(to_json(x.component(x.n() + i))); }
    j["dp"] = std::move(dp);
    j["dq"] = std::move(dq);
    return j;
}

inline VectorField field_from_json(const Json &j) {
    if (!j.contains("n") || !j.contains("dp") || !j.contains("dq")) {
        throw ParseError("field: expected keys \"n\", \"dp\", \"dq\"");
    }
    if (!j["n"].is_number_unsigned()) { throw ParseError("field: \"n\" must be a non-negative integer"); }
    const std::size_t n = j["n"].get<std::size_t>();
    if (!j["dp"].is_array() || j["dp"].size() != n || !j["dq"].is_array() || j["dq"].size() != n) {
        throw ParseError("field: \"dp\" and \"dq\" must each list n polynomials");
    }
    VectorField x(n);
    for (std::size_t i = 0; i < n; ++i) { x.component(i) = polynomial_from_json(j["dp"][i], n); }
    for (std::size_t i = 0; i < n; ++i) { x.component(n + i) = polynomial_from_json(j["dq"][i], n); }
    return x;
}

inline Json to_json(const LeibnizAlgebra &a) {
    Json j;
    j["name"] = a.name();
    j["dim"] = a.dim();
    Json bracket = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t jj = 0; jj < a.dim(); ++jj) {
            Json out = Json::object();
            for (std::size_t k = 0; k < a.dim(); ++k) {
                if (!a.c(i, jj, k).is_zero()) { out[std::to_string(k + 1)] = a.c(i, jj, k).str(); }
            }
            if (!out.empty()) {
                Json entry;
                entry["i"] = i + 1;
                entry["j"] = jj + 1;
                entry["out"] = std::move(out);
                bracket.push_back(std::move(entry));
            }
        }
    }
    j["bracket"] = std::move(bracket);
    return j;
}

inline LeibnizAlgebra algebra_from_json(const Json &j) {
    if (!j.contains("dim")) { throw ParseError("algebra: missing \"dim\""); }
    if (!j["dim"].is_number_unsigned()) { throw ParseError("algebra: \"dim\" must be a positive integer"); }
    const std::size_t d = j["dim"].get<std::size_t>();
    if (d == 0) { throw ParseError("algebra: \"dim\" must be positive"); }
    const std::string name = j.contains("name") ? j["name"].get<std::string>() : "algebra";
    LeibnizAlgebra a(d, name);
    if (!j.contains("bracket")) { return a; }
    if (!j["bracket"].is_array()) { throw ParseError("algebra: \"bracket\" must be a list"); }
    for (const auto &entry : j["bracket"]) {
        if (!entry.contains("i") || !entry.contains("j") || !entry.contains("out")) {
            throw ParseError("algebra: each bracket entry needs \"i\", \"j\", \"out\"");
        }
        const std::size_t i = entry["i"].get<std::size_t>();
        const std::size_t jj = entry["j"].get<std::size_t>();
        if (i < 1 || i > d || jj < 1 || jj > d) { throw ParseError("algebra: bracket index out of range"); }
        for (const auto &[key, value] : entry["out"].items()) {
            std::size_t k = 0;
            try {
                k = static_cast<std::size_t>(std::stoul(key));
            } catch (const std::exception &) {
                throw ParseError("algebra: output index \"" + key + "\" is not an integer");
            }
            if (k < 1 || k > d) { throw ParseError("algebra: output index out of range"); }
            a.c(i - 1, jj - 1, k - 1) += rational_from_json(value);
        }
    }
    return a;
}

inline Json to_json(const RationalMatrix &m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) { row.push_back(m.at(i, j).str()); }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline RationalMatrix matrix_from_json(const Json &j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) { throw ParseError("matrix: wrong number of rows"); }
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) { throw ParseError("matrix: wrong number of columns"); }
        for (std::size_t c = 0; c < cols; ++c) { m.at(i, c) = rational_from_json(j[i][c]); }
    }
    return m;
}

inline Json to_json(const RMatrix &r) {
    Json j;
    j["n"] = r.n;
    j["r"] = to_json(r.m);
    return j;
}

inline RMatrix rmatrix_from_json(const Json &j) {
    if (!j.contains("n") || !j.contains("r")) { throw ParseError("r-matrix: expected keys \"n\" and \"r\""); }
    const std::size_t n = j["n"].get<std::size_t>();
    return RMatrix(n, matrix_from_json(j["r"], n, n));
}

inline Json to_json(const LinearOperator &op) {
    Json j;
    j["n"] = op.n();
    j["matrix"] = to_json(op.matrix());
    if (op.generator()) { j["h"] = to_json(*op.generator()); }
    return j;
}

inline LinearOperator operator_from_json(const Json &j) {
    if (!j.contains("n") || !j.contains("matrix")) {
        throw ParseError("operator: expected keys \"n\" and \"matrix\"");
    }
    const std::size_t n = j["n"].get<std::size_t>();
    RationalMatrix m = matrix_from_json(j["matrix"], 2 * n, 2 * n);
    if (j.contains("h")) {
        try {
            return LinearOperator(n, std::move(m), polynomial_from_json(j["h"], n));
        } catch (const PreconditionError &e) {
            throw ParseError(std::string("operator: ") + e.what());
        }
    }
    return LinearOperator(n, std::move(m));
}

inline Json to_json(const Subspace &d) {
    Json j;
    j["n"] = d.n();
    Json rows = Json::array();
    for (const auto &b : d.basis()) {
        Json row = Json::array();
        for (const auto &c : linear_coefficients(b)) { row.push_back(c.str()); }
        rows.push_back(std::move(row));
    }
    j["basis"] = std::move(rows);
    return j;
}

inline Subspace subspace_from_json(const Json &j) {
    if (!j.contains("n") || !j.contains("basis")) { throw ParseError("subspace: expected keys \"n\" and \"basis\""); }
    const std::size_t n = j["n"].get<std::size_t>();
    if (!j["basis"].is_array()) { throw ParseError("subspace: \"basis\" must be a list"); }
    std::vector<Polynomial> basis;
    for (const auto &row : j["basis"]) {
        if (!row.is_array() || row.size() != 2 * n) {
            throw ParseError("subspace: each basis row must list 2n coefficients");
        }
        std::vector<Rational> coeffs;
        coeffs.reserve(2 * n);
        for (const auto &c : row) { coeffs.push_back(rational_from_json(c)); }
        basis.push_back(linear_from_coefficients(n, coeffs));
    }
    try {
        return Subspace(n, std::move(basis));
    } catch (const Error &e) {
        throw ParseError(std::string("subspace: ") + e.what());
    }
}

/// Cochains serialize as nested coefficient arrays, innermost the output
/// coordinates: arity levels of nesting, then the value vector.
inline Json to_json(const Cochain &c) {
    std::vector<std::size_t> tuple(c.arity(), 0);
    // recursive build over the levels
    struct Builder {
        const Cochain &c;
        Json build(std::vector<std::size_t> &tuple, std::size_t level) {
            Json arr = Json::array();
            if (level == c.arity()) {
                for (std::size_t k = 0; k < c.dim(); ++k) { arr.push_back(c.at(tuple, k).str()); }
                return arr;
            }
            for (std::size_t i = 0; i < c.dim(); ++i) {
                tuple[level] = i;
                arr.push_back(build(tuple, level + 1));
            }
            return arr;
        }
    } builder{c};
    return builder.build(tuple, 0);
}

} // namespace loday
