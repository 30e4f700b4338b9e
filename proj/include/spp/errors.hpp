#pragma once

#include <stdexcept>
#include <string>

namespace spp {

// Invalid argument values (non-positive frequency, efficiency outside [0,1], ...).
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested solution does not exist (no bound mode, unmatchable angle, ...).
class no_solution_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Constraint set admits no feasible point (e.g. penetration bound over a d-range).
class infeasible_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical breakdown that indicates a bug rather than bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Problem size beyond the supported combinatorial scale.
class scale_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Config file syntax problem; carries the 1-based line number.
class config_error : public std::runtime_error {
 public:
  config_error(const std::string& msg, int line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace spp
