#ifndef CLIQUEFLOW_DIMACS_HPP
#define CLIQUEFLOW_DIMACS_HPP

#include <stdexcept>
#include <string>

#include "cliqueflow/graph.hpp"

namespace cliqueflow {

class DimacsParseError : public std::runtime_error {
public:
    DimacsParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// DIMACS edge format. "c" lines are comments, the first non-comment line must
// be "p edge <n> <m>", then exactly m lines "e <u> <v>" with 1-based endpoints.
// Duplicate edge lines collapse; self-loops are an error.
Graph parse_dimacs(const std::string& text);

// Inverse of parse_dimacs: 1-based endpoints, edges sorted ascending, LF line
// endings. parse_dimacs(write_dimacs(g)) == g.
std::string write_dimacs(const Graph& g);

}  // namespace cliqueflow

#endif  // CLIQUEFLOW_DIMACS_HPP
