#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semifree/classifier.hpp"

namespace semifree {

// one transcribed row of a published classification table
struct PaperRow {
    std::string label;          // "(I-2)"
    std::string printed_label;  // when the table prints a different label
    std::string table;
    std::string case_spec;
    std::string m0_printed;
    std::string seed;
    std::string seed_euler;
    int points_minus = 0;
    std::vector<std::string> z0;
    std::vector<Int> z0_genus;
    Int b2 = 0;
    Int c1_cubed = 0;
    std::optional<Int> vol_min, vol_max;
    std::string note;
};

struct PaperRow4 {
    std::string label;
    std::string case_spec;
    int k = 0;
    Int b = 0;
    std::string manifold;
    std::string euler;
};

// throws std::runtime_error with a parse diagnostic
std::vector<PaperRow> load_paper_rows(const std::string& path);
std::vector<PaperRow4> load_paper_rows_4dim(const std::string& path);

TfdParams params_of(const PaperRow& row);

struct LabeledTable {
    std::vector<TFD> rows;              // paper order first, unlisted rows after
    std::vector<std::string> findings;  // discrepancies in either direction
    std::vector<std::string> missing;   // paper labels with no enumerated match
};

// Matches enumerated TFDs against transcribed rows by canonical key.
LabeledTable label_rows(const std::vector<TFD>& enumerated, const std::vector<PaperRow>& rows);

// every 6-dimensional table, labeled against the transcription at paper_tables_path
LabeledTable classify_all(const std::string& paper_tables_path);

void label_rows_4dim(std::vector<TFD4>& rows, const std::vector<PaperRow4>& paper,
                     std::vector<std::string>* findings);

} // namespace semifree
