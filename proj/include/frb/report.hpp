#pragma once

// Tabular results of bound computations and their CSV / JSON forms.

#include "frb/bounds.hpp"

#include <string>
#include <utility>
#include <vector>

namespace frb {

struct ReportCase {
    std::string label;
    IndexList witness;

    bool operator==(const ReportCase&) const = default;
};

struct ReportRow {
    std::string target; // "l=17", "d2", ...
    std::string method;
    int value = 0;
    IndexList certificate; // witness of the case attaining the value
    std::vector<ReportCase> cases;

    bool operator==(const ReportRow&) const = default;
};

struct BoundReport {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<ReportRow> rows;

    void add_meta(std::string key, std::string value) { meta.emplace_back(std::move(key), std::move(value)); }
    void add(std::string target, Method m, const BoundValue& b);

    bool operator==(const BoundReport&) const = default;
};

/// `# key=value` lines, then target,method,value,certificate with the
/// certificate as space-separated indices.
std::string to_csv(const BoundReport& r);

/// {"meta": {...}, "bounds": {target: {method: {value, certificate, cases}}}}.
std::string to_json(const BoundReport& r);
/// Inverse of to_json. Throws std::invalid_argument on malformed input.
BoundReport report_from_json(const std::string& text);

} // namespace frb
