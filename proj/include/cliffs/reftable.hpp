#pragma once

#include <string>
#include <vector>

namespace cliffs {

struct TableRow {
    std::string topic;
    std::string name;
    bool pass = false;
    std::string detail;  // expected/got summary on failure, or the error text
};

// Recomputes every reference sequence and worked value embedded in the
// library's verification table. Exceptions inside a row mark it failed.
std::vector<TableRow> run_reference_table();

}  // namespace cliffs
