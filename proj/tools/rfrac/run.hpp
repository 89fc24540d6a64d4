#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rfrac/config.hpp"

namespace rfrac::cli {

// One comparison inside a check; its error is |computed - expected| / scale.
struct Sample {
    std::string label;
    cplx computed{};
    cplx expected{};
    double scale = 1.0;
};

struct Record {
    std::string check;
    std::string anchor;
    std::string model;
    cplx computed{};
    cplx expected{};
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::optional<double> runtime_ms;  // only with timings on, so reports stay reproducible
    std::string detail;
};

using Report = std::vector<Record>;

struct CheckContext {
    const Model& model;
    const RunConfig& cfg;
};

using Runner = std::vector<Sample> (*)(const CheckContext&);

struct CheckEntry {
    const char* id;
    const char* model;
    const char* anchor;
    double tol;
    Runner run;
};

// The check catalog: one row per (check id, model).
const std::vector<CheckEntry>& check_catalog();

// Anchor of the model's closed-form norm.
std::string norm_anchor(const std::string& model);

// Seven lines: name, norm anchor, defaults, domain.
std::string list_models();
// One line per catalog row: id, model, anchor, default tolerance.
std::string list_checks();

// Parse errors (unknown check, model mismatch) throw ParseError; parameters outside a domain
// throw DomainError. Failures of individual comparisons end up in the records.
Report run(const RunConfig& cfg);

bool all_pass(const Report& r);

} // namespace rfrac::cli
