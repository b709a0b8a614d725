#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "maxnorm/labeling.hpp"

namespace maxnorm {

// Problem files are line oriented:
//
//   MAXNORM-BLP 1
//   <n> <m>
//   U <i> <phi0> <phi1>                          (n lines)
//   P <i> <j> <phi00> <phi01> <phi10> <phi11>    (m lines)
//
// Lines starting with '#' are comments. Each variable appears in exactly one U line.

/// Throws InvalidProblem with a line number on malformed input.
LabelingProblem read_problem(std::istream& in);
LabelingProblem read_problem_file(const std::filesystem::path& path);

/// Writes weights in shortest round-trip decimal form.
void write_problem(std::ostream& out, const LabelingProblem& p);
void write_problem_file(const std::filesystem::path& path, const LabelingProblem& p);

/// `L <i> <0|1>` per variable, then `E_INF <value>`.
void write_labeling(std::ostream& out, const TruthAssignment& l, double e_inf);

/// Shortest decimal string that parses back to exactly `x`.
std::string format_double(double x);

}  // namespace maxnorm
