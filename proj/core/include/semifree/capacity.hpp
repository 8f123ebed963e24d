#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semifree/classifier.hpp"

namespace semifree {

struct CapacityRow {
    std::string label;
    Int h_min = 0, h_smin = 0, h_max = 0;
    std::optional<Int> gromov_width;   // h_smin - h_min
    std::optional<Int> hofer_zehnder;  // h_max - h_min
    std::string status;                // "ok" or "hypothesis not met"
};

// Both formulas need an isolated minimum; otherwise only the levels are filled in.
CapacityRow capacities(const TFD& t);

std::vector<CapacityRow> capacity_table(const std::vector<TFD>& rows);

} // namespace semifree
