#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace paramsurf {

// Invalid user input: expressions, configs, germs, permutations. CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failure: root finding, tracking, matching. CLI exit code 3.
// Carries the failing branch label and the refinement depth reached, when known.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg, std::string branch = {}, int refine_depth = -1)
      : std::runtime_error(msg), branch_(std::move(branch)), refine_depth_(refine_depth) {}

  const std::string& branch() const { return branch_; }
  int refine_depth() const { return refine_depth_; }

 private:
  std::string branch_;
  int refine_depth_;
};

}  // namespace paramsurf
