#pragma once

#include <string>
#include <vector>

#include "semifree/capacity.hpp"
#include "semifree/classifier.hpp"
#include "semifree/momentdata.hpp"

namespace semifree {

enum class Format { Json, Markdown, Text };

// "json", "markdown"/"md", "text"; throws std::invalid_argument otherwise
Format parse_format(const std::string& name);

// Renderings are deterministic: fixed row order, sorted JSON keys, no floating point.
std::string render_tfds(const std::vector<TFD>& rows, Format f);
std::string render_tfd4(const std::vector<TFD4>& rows, Format f);
std::string render_capacities(const std::vector<CapacityRow>& rows, Format f);
std::string render_reports(const std::vector<ExampleReport>& reports, Format f);

// Rebuilds a TFD from its JSON form (only case, seed, seed_euler, m_minus, z0 and label are
// read). The orientation is kept as given; key is the canonical key.
// Throws std::runtime_error with a diagnostic on malformed or invalid input.
TFD parse_tfd(const std::string& text);
TFD load_tfd(const std::string& path);

// Row-level comparison of an emitted "semifree-tfd/1" or "semifree-tfd4/1" document against a
// golden file. Only golden rows whose case is in `cases` are expected (all when empty).
std::vector<std::string> golden_diff(const std::string& emitted, const std::string& golden_path,
                                     const std::vector<std::string>& cases = {});

// Published capacity table
std::vector<CapacityRow> load_paper_capacities(const std::string& path);

} // namespace semifree
