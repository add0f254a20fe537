#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace loday {

/// One verification step inside a report. A failed check always carries a
/// concrete witness (basis labels) and the exact defect value.
struct CheckEntry {
    std::string name;
    bool pass = false;
    std::vector<std::string> witness; // basis tuple of the failure, empty when passing
    std::string defect;               // exact defect value at the witness
    std::string detail;               // free-form extra output (derived brackets, components, ...)
};

struct Report {
    std::string subject;
    std::vector<CheckEntry> checks;
    double seconds = 0.0; // human output only; never serialized

    bool all_pass() const {
        for (const auto &c : checks) {
            if (!c.pass) { return false; }
        }
        return true;
    }

    CheckEntry &add(std::string name, bool pass) {
        checks.push_back(CheckEntry{std::move(name), pass, {}, "", ""});
        return checks.back();
    }
};

/// Basis label on the plane of half-dimension n: p1..pn then q1..qn.
inline std::string basis_label(std::size_t n, std::size_t slot) {
    if (slot < n) { return "p" + std::to_string(slot + 1); }
    return "q" + std::to_string(slot - n + 1);
}

/// Basis label on an algebra: e1..ed.
inline std::string algebra_label(std::size_t slot) { return "e" + std::to_string(slot + 1); }

/// Machine-readable form; deterministic (no timing, insertion-ordered keys).
inline nlohmann::ordered_json report_to_json(const Report &r) {
    nlohmann::ordered_json j;
    j["subject"] = r.subject;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto &c : r.checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.witness.empty()) { e["witness"] = c.witness; }
        if (!c.defect.empty()) { e["defect"] = c.defect; }
        if (!c.detail.empty()) { e["detail"] = c.detail; }
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    j["pass"] = r.all_pass();
    return j;
}

inline void render_human(const Report &r, std::ostream &os) {
    os << "== " << r.subject << " ==\n";
    for (const auto &c : r.checks) {
        os << (c.pass ? "  [ok]   " : "  [FAIL] ") << c.name;
        if (!c.detail.empty()) { os << ": " << c.detail; }
        os << "\n";
        if (!c.pass && !c.witness.empty()) {
            os << "         witness (";
            for (std::size_t i = 0; i < c.witness.size(); ++i) {
                if (i) { os << ", "; }
                os << c.witness[i];
            }
            os << ")";
            if (!c.defect.empty()) { os << " defect " << c.defect; }
            os << "\n";
        }
    }
    os << (r.all_pass() ? "all checks passed" : "CHECKS FAILED") << " (" << r.seconds << " s)\n";
}

} // namespace loday
