#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace quintic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iteration hit its cap or failed to reach the requested tolerance.
/// `bracket_lo`/`bracket_hi` carry the best known enclosure when there is one.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::string lo = {}, std::string hi = {})
      : Error(what), bracket_lo(std::move(lo)), bracket_hi(std::move(hi)) {}

  std::string bracket_lo;
  std::string bracket_hi;
};

/// No candidate root lies on the required real branch.
class BranchError : public Error {
 public:
  struct Candidate {
    std::string value;
    std::string residual;
  };

  BranchError(const std::string& what, std::vector<Candidate> candidates = {})
      : Error(what), candidates(std::move(candidates)) {}

  std::vector<Candidate> candidates;
};

/// Unknown identity id, malformed rational and similar caller mistakes.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace quintic
