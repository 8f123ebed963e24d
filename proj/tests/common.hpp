#pragma once

#include <string>

#include "semifree/golden.hpp"

namespace semifree::test {

inline std::string golden_dir() { return SEMIFREE_GOLDEN_DIR; }
inline std::string moment_data_dir() { return SEMIFREE_MOMENT_DATA_DIR; }
inline std::string test_data_dir() { return SEMIFREE_TEST_DATA_DIR; }

// the full labeled classification, computed once per process
inline const LabeledTable& labeled() {
    static const LabeledTable t = classify_all(golden_dir() + "/paper_tables.json");
    return t;
}

inline const TFD* by_label(const std::string& label) {
    for (const auto& t : labeled().rows)
        if (t.label == label) return &t;
    return nullptr;
}

} // namespace semifree::test
