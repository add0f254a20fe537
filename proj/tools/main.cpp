// Command-line front end: loads JSON descriptions of algebras, fields,
// r-matrices and operators, runs the verification pipelines and emits
// human-readable or machine-readable reports. Exit codes: 0 every requested
// check passed, 1 at least one check failed, 2 bad input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "loday/doubles.hpp"
#include "loday/json_io.hpp"
#include "loday/nijenhuis.hpp"
#include "loday/report.hpp"
#include "loday/rmatrix.hpp"

namespace {

using namespace loday;

struct Options {
    bool json = false;
    std::size_t max_arity = kDefaultArityCap;
    unsigned max_order = 8;
};

Json load_json(const std::string &path) {
    std::ifstream in(path);
    if (!in) { throw ParseError("cannot open file: " + path); }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::vector<std::string> witness_labels(std::size_t n, const std::vector<std::size_t> &tuple) {
    std::vector<std::string> out;
    out.reserve(tuple.size());
    for (const auto t : tuple) { out.push_back(basis_label(n, t)); }
    return out;
}

int emit(const Report &report, const Options &opt) {
    if (opt.json) {
        std::cout << report_to_json(report).dump(2) << "\n";
    } else {
        render_human(report, std::cout);
    }
    return report.all_pass() ? 0 : 1;
}

/// Either an algebra file (key "dim") or a field file (keys "n", "dp", "dq").
StructureField load_structure_field(const Json &j, std::string &subject) {
    if (j.contains("dim")) {
        const LeibnizAlgebra a = algebra_from_json(j);
        const auto leib = check_leibniz(a);
        if (!leib.ok) { throw ParseError("algebra " + a.name() + " fails the Leibniz identity"); }
        subject = a.name();
        return structure_field(a);
    }
    if (j.contains("dp")) {
        subject = "field";
        try {
            return StructureField(field_from_json(j));
        } catch (const DegreeError &e) {
            throw ParseError(std::string("field: ") + e.what());
        }
    }
    throw ParseError("expected an algebra file (\"dim\") or a field file (\"n\"/\"dp\"/\"dq\")");
}

void add_field_checks(Report &report, const StructureField &l) {
    const std::size_t n = l.n();
    auto &coh = report.add("cohomological", l.cohomological());
    if (!l.cohomological()) {
        const auto &res = l.cohomological_result();
        coh.witness = witness_labels(n, {res.witness[0], res.witness[1]});
        coh.defect = res.defect.str();
    }
    auto &anti = report.add("anti-cyclic", l.anticyclic());
    if (!l.anticyclic()) {
        const auto &res = l.anticyclic_result();
        anti.witness = witness_labels(n, res.witness);
        anti.defect = res.defect.str();
    }
    report.add("leibniz-field", is_leibniz_field(l));
}

int cmd_check(const std::string &path, const Options &opt) {
    const LeibnizAlgebra a = algebra_from_json(load_json(path));
    Report report;
    report.subject = a.name();
    const auto t0 = std::chrono::steady_clock::now();

    const auto leib = check_leibniz(a);
    auto &lc = report.add("leibniz-identity", leib.ok);
    if (!leib.ok) {
        const auto &[i, j, k] = leib.failures.front();
        lc.witness = {algebra_label(i), algebra_label(j), algebra_label(k)};
        std::ostringstream os;
        bool first = true;
        for (std::size_t s = 0; s < a.dim(); ++s) {
            if (leib.defects.front()[s].is_zero()) { continue; }
            if (!first) { os << " + "; }
            os << leib.defects.front()[s].str() << "*" << algebra_label(s);
            first = false;
        }
        lc.defect = os.str();
    }

    if (leib.ok) {
        const Cochain mu = semidirect_double(a);
        const auto mc = is_maurer_cartan(mu, opt.max_arity);
        report.add("double-maurer-cartan", mc.ok);
        const auto inv = check_invariance(mu);
        auto &left = report.add("double-invariance-left", inv.left_ok);
        if (!inv.left_ok) {
            left.witness = witness_labels(a.dim(), {inv.left_witness[0], inv.left_witness[1], inv.left_witness[2]});
            left.defect = inv.left_defect.str();
        }
        auto &right = report.add("double-invariance-right", inv.right_ok);
        if (!inv.right_ok) {
            right.witness =
                witness_labels(a.dim(), {inv.right_witness[0], inv.right_witness[1], inv.right_witness[2]});
            right.defect = inv.right_defect.str();
        }
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return emit(report, opt);
}

int cmd_field(const std::string &path, bool check, const std::vector<long> &derive, bool decompose,
              const Options &opt) {
    const Json j = load_json(path);
    Report report;
    StructureField l = load_structure_field(j, report.subject);
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = l.n();

    if (check) { add_field_checks(report, l); }
    if (!derive.empty()) {
        const long i = derive[0];
        const long jj = derive[1];
        if (i < 1 || jj < 1 || i > static_cast<long>(2 * n) || jj > static_cast<long>(2 * n)) {
            throw ParseError("--derive: indices must lie in 1..2n");
        }
        const Polynomial bi = Polynomial::variable(n, static_cast<std::size_t>(i - 1));
        const Polynomial bj = Polynomial::variable(n, static_cast<std::size_t>(jj - 1));
        auto &entry = report.add("derived-bracket[" + basis_label(n, i - 1) + "," + basis_label(n, jj - 1) + "]",
                                 true);
        entry.detail = derived_bracket(l, bi, bj).str();
    }
    if (decompose) {
        const auto parts = bidegree_decompose(l);
        report.add("component(0,1)", true).detail = parts.l.str();
        report.add("component(-1,2)", true).detail = parts.phi.str();
        report.add("component(1,0)", true).detail = parts.l_star.str();
        report.add("component(2,-1)", true).detail = parts.phi_star.str();
        report.add("decomposition-reassembles", parts.sum() == l.field());
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return emit(report, opt);
}

void add_lybe_checks(Report &report, const LeibnizAlgebra &a, const RMatrix &r, bool flow, const Options &opt) {
    const bool anti = is_anti_triangular(r);
    report.add("anti-triangular", anti);
    const auto lybe = lybe_check(a, r);
    auto &lentry = report.add("lybe", lybe.ok);
    if (!lybe.ok) {
        lentry.witness = {"q" + std::to_string(lybe.witness[0] + 1), "q" + std::to_string(lybe.witness[1] + 1)};
        std::ostringstream os;
        bool first = true;
        for (std::size_t s = 0; s < lybe.defect.size(); ++s) {
            if (lybe.defect[s].is_zero()) { continue; }
            if (!first) { os << " + "; }
            os << lybe.defect[s].str() << "*" << basis_label(a.dim(), s);
            first = false;
        }
        lentry.defect = os.str();
    }
    report.add("lybe-graph-route-agrees", lybe.graph_route_agrees);
    if (a.is_antisymmetric()) { report.add("lybe-lie-reduction-agrees", lybe.lie_reduction_agrees); }

    if (anti) {
        const StructureField l = structure_field(a);
        const VectorField h = r_to_hamiltonian(r);
        const auto hh = hh_check(l, h);
        report.add("hh-identity", hh.identity_holds);
        report.add("hh-bracket-vanishes", hh.bracket_vanishes);
        if (flow) {
            const StructureField flowed = flow_transform(l, h, opt.max_order);
            report.add("flow-leibniz-field", is_leibniz_field(flowed));
        }
    }
}

int cmd_lybe(const std::string &algebra_path, const std::string &r_path, const std::string &search,
             bool flow, const Options &opt) {
    const LeibnizAlgebra a = algebra_from_json(load_json(algebra_path));
    if (!check_leibniz(a).ok) { throw ParseError("algebra " + a.name() + " fails the Leibniz identity"); }
    Report report;
    report.subject = a.name();
    const auto t0 = std::chrono::steady_clock::now();

    if (!search.empty()) {
        // enumerate symmetric matrices with entries from the finite set
        std::vector<Rational> entries;
        std::stringstream ss(search);
        std::string item;
        while (std::getline(ss, item, ',')) { entries.push_back(Rational::parse(item)); }
        if (entries.empty()) { throw ParseError("--search: empty entry set"); }
        const std::size_t d = a.dim();
        const std::size_t slots = d * (d + 1) / 2;
        std::vector<std::size_t> pick(slots, 0);
        std::size_t solutions = 0;
        bool more = true;
        while (more) {
            RationalMatrix m(d, d);
            std::size_t t = 0;
            for (std::size_t i = 0; i < d; ++i) {
                for (std::size_t j = i; j < d; ++j) {
                    m.at(i, j) = entries[pick[t]];
                    m.at(j, i) = entries[pick[t]];
                    ++t;
                }
            }
            const RMatrix r(d, m);
            if (lybe_check(a, r).ok) {
                ++solutions;
                report.add("solution-" + std::to_string(solutions), true).detail = to_json(r.m).dump();
            }
            more = false;
            for (std::size_t s = slots; s-- > 0;) {
                if (++pick[s] < entries.size()) {
                    more = true;
                    break;
                }
                pick[s] = 0;
            }
        }
        report.add("search-complete", true).detail = std::to_string(solutions) + " solution(s)";
    } else {
        const RMatrix r = rmatrix_from_json(load_json(r_path));
        add_lybe_checks(report, a, r, flow, opt);
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return emit(report, opt);
}

int cmd_nijenhuis(const std::string &path, const std::string &op_path, const std::string &t_str,
                  const Options &opt) {
    const Json j = load_json(path);
    Report report;
    StructureField l = load_structure_field(j, report.subject);
    const LinearOperator nop = operator_from_json(load_json(op_path));
    if (nop.n() != l.n()) { throw ParseError("operator and field live on different planes"); }
    const auto t0 = std::chrono::steady_clock::now();

    const Cochain mu = psi(l, opt.max_arity);
    const auto fnc = fnc_check(mu, nop);
    report.add("fnc-identity", fnc.holds);
    const bool torsion_free = torsion(mu, nop).is_zero();
    report.add("torsion-free", torsion_free);
    const auto complex_res = is_complex_structure(mu, nop);
    report.add("squares-to-minus-one", complex_res.squares_to_minus_one);
    report.add("complex-structure", complex_res.ok());
    if (complex_res.ok()) { report.add("double-bracket-is-minus-mu", complex_res.double_bracket_is_minus_mu); }

    if (torsion_free) {
        const Cochain bracket = graded_bracket(mu, nop.as_cochain(), opt.max_arity);
        const bool flat = is_maurer_cartan(bracket, opt.max_arity).ok;
        report.add("deformation-flat", flat);
        if (flat) {
            const Rational t = Rational::parse(t_str);
            const Cochain deformed = deform(mu, nop, t);
            report.add("deformed-maurer-cartan", is_maurer_cartan(deformed, opt.max_arity).ok);
        }
        if (nop.generator()) {
            const StructureField deformation_field = nijenhuis_field_check(l, nop);
            report.add("field-deformation-leibniz", is_leibniz_field(deformation_field));
        }
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return emit(report, opt);
}

int cmd_double(const std::string &path, bool semisimple, const Options &opt) {
    const LeibnizAlgebra a = algebra_from_json(load_json(path));
    if (!check_leibniz(a).ok) { throw ParseError("algebra " + a.name() + " fails the Leibniz identity"); }
    Report report;
    report.subject = a.name() + (semisimple ? " (semisimple double)" : " (semi-direct double)");
    const auto t0 = std::chrono::steady_clock::now();

    Cochain mu;
    if (semisimple) {
        const RationalMatrix k = killing_form(a);
        mu = semisimple_double(a, k);
    } else {
        mu = semidirect_double(a);
    }
    report.add("double-maurer-cartan", is_maurer_cartan(mu, opt.max_arity).ok);
    const auto inv = check_invariance(mu);
    report.add("double-invariance-left", inv.left_ok);
    report.add("double-invariance-right", inv.right_ok);
    report.add("bracket", true).detail = to_json(mu).dump();
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return emit(report, opt);
}

int cmd_flow(const std::string &algebra_path, const std::string &r_path, const Options &opt) {
    const LeibnizAlgebra a = algebra_from_json(load_json(algebra_path));
    if (!check_leibniz(a).ok) { throw ParseError("algebra " + a.name() + " fails the Leibniz identity"); }
    const RMatrix r = rmatrix_from_json(load_json(r_path));
    Report report;
    report.subject = a.name() + " flow";
    const auto t0 = std::chrono::steady_clock::now();

    report.add("anti-triangular", is_anti_triangular(r));
    const StructureField l = structure_field(a);
    const VectorField h = r_to_hamiltonian(r);
    const StructureField flowed = flow_transform(l, h, opt.max_order);
    report.add("flow-leibniz-field", is_leibniz_field(flowed));

    // iterated brackets, for the termination order
    unsigned order = 0;
    VectorField iterate = l.field();
    while (!iterate.is_zero() && order <= opt.max_order) {
        iterate = commutator(iterate, h);
        ++order;
    }
    report.add("series-terminates", iterate.is_zero()).detail = "order " + std::to_string(order);

    const auto parts = bidegree_decompose(flowed);
    report.add("component(0,1)", true).detail = parts.l.str();
    report.add("component(1,0)", true).detail = parts.l_star.str();
    report.add("component(2,-1)", true).detail = parts.phi_star.str();
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return emit(report, opt);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"exact verification of Leibniz algebra structures on the symplectic plane"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "machine-readable output");
    app.add_option("--max-arity", opt.max_arity, "cochain arity cap")->capture_default_str();
    app.add_option("--max-order", opt.max_order, "exponential series order cap")->capture_default_str();

    std::string algebra_path;
    std::string r_path;
    std::string op_path;
    std::string search;
    std::string t_str = "1";
    bool check_flag = false;
    bool decompose_flag = false;
    bool flow_flag = false;
    bool semisimple_flag = false;
    std::vector<long> derive;

    auto *check = app.add_subcommand("check", "Leibniz identity, double, invariance");
    check->fallthrough();
    check->add_option("algebra", algebra_path, "algebra JSON file")->required();

    auto *field = app.add_subcommand("field", "structure field checks");
    field->fallthrough();
    field->add_option("input", algebra_path, "algebra or field JSON file")->required();
    field->add_flag("--check", check_flag, "report cohomological / anti-cyclic / Leibniz flags");
    field->add_option("--derive", derive, "derived bracket of two basis elements (1-based)")->expected(2);
    field->add_flag("--decompose", decompose_flag, "four bidegree components");

    auto *lybe = app.add_subcommand("lybe", "Yang-Baxter checks for an r-matrix");
    lybe->fallthrough();
    lybe->add_option("algebra", algebra_path, "algebra JSON file")->required();
    lybe->add_option("rmatrix", r_path, "r-matrix JSON file");
    lybe->add_option("--search", search, "comma-separated entries; search all symmetric matrices");
    lybe->add_flag("--flow", flow_flag, "apply exp(X_H) and re-check the Leibniz field condition");

    auto *nij = app.add_subcommand("nijenhuis", "torsion / complex-structure checks for an operator");
    nij->fallthrough();
    nij->add_option("input", algebra_path, "algebra or field JSON file")->required();
    nij->add_option("operator", op_path, "operator JSON file")->required();
    nij->add_option("--t", t_str, "deformation parameter (rational)")->capture_default_str();

    auto *dbl = app.add_subcommand("double", "construct and verify the double bracket");
    dbl->fallthrough();
    dbl->add_option("algebra", algebra_path, "algebra JSON file")->required();
    dbl->add_flag("--semisimple", semisimple_flag, "use the Killing pairing double");

    auto *flow = app.add_subcommand("flow", "exponential flow of the structure field");
    flow->fallthrough();
    flow->add_option("algebra", algebra_path, "algebra JSON file")->required();
    flow->add_option("rmatrix", r_path, "r-matrix JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed()) { return cmd_check(algebra_path, opt); }
        if (field->parsed()) {
            if (!check_flag && derive.empty() && !decompose_flag) { check_flag = true; }
            return cmd_field(algebra_path, check_flag, derive, decompose_flag, opt);
        }
        if (lybe->parsed()) {
            if (r_path.empty() && search.empty()) { throw loday::ParseError("lybe: need an r-matrix file or --search"); }
            return cmd_lybe(algebra_path, r_path, search, flow_flag, opt);
        }
        if (nij->parsed()) { return cmd_nijenhuis(algebra_path, op_path, t_str, opt); }
        if (dbl->parsed()) { return cmd_double(algebra_path, semisimple_flag, opt); }
        if (flow->parsed()) { return cmd_flow(algebra_path, r_path, opt); }
    } catch (const loday::ParseError &e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const loday::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
