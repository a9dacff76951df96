#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclide::cli {

// Runs one verb. Results go to `out` as a single JSON line. Exit codes:
// 0 success, 1 usage/parse/I/O errors, 2 domain errors (no solution,
// component mismatch, ...). Error JSON is written to `out` as well.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclide::cli
