#pragma once

#include <string>
#include <vector>

#include "lrc/caps.hpp"
#include "lrc/io.hpp"

namespace lrc::cli {

enum class Mark { Yes, Almost, Open };

/// One claimed row of a table of optimal LLRCs, instantiated at small parameters.
struct TableRow {
    std::string name;
    std::string params;
    std::size_t n, k, d, r;
    Mark d_mark;
    Mark k_mark;
    std::string family_words;  // family and key=value parameters
    std::vector<std::string> transforms;
};

std::vector<TableRow> table_rows(int which);

struct TableResult {
    Json json;
    std::string text;
    int failures = 0;
    int skipped = 0;
};

/// Builds and analyzes every row (or only the rows whose name contains `filter`).
TableResult run_table(int which, const Caps& caps, const std::string& filter = "");

}  // namespace lrc::cli
