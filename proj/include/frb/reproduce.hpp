#pragma once

// Reference values for the F8 and F27 presets and the checks that compare
// them with what the library computes. Feng-Rao values must match exactly;
// advisory and improved values pass when they are at least the reference
// and their certificate re-verifies.

#include "frb/bounds.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace frb {

struct Check {
    std::string item;
    std::string expected;
    std::string computed;
    bool pass = false;
    std::string note;
};

struct Reproduction {
    std::string name;
    std::vector<Check> checks;

    bool passed() const;
    int failures() const;
};

std::vector<std::string> reproduction_targets();

/// One of reproduction_targets(); throws std::invalid_argument otherwise.
Reproduction reproduce(const std::string& target, const BoundOptions& opts = {});

/// Per-l values on F8.
Reproduction reproduce_per_l(const BoundOptions& opts = {});
/// Sixth generalized weight of the F8 codes C(s). "sec42" runs both.
Reproduction reproduce_d6(const BoundOptions& opts = {});
Reproduction reproduce_table1(const BoundOptions& opts = {});
Reproduction reproduce_table2(const BoundOptions& opts = {});
Reproduction reproduce_table3(const BoundOptions& opts = {});
Reproduction reproduce_props(const BoundOptions& opts = {});

/// Fixed-width text table with a trailing summary line.
void print_reproduction(std::ostream& out, const Reproduction& r);

} // namespace frb
