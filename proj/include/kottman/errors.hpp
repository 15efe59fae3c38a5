#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kottman {

/// Caller violated a documented precondition (bad index, dimension mismatch,
/// set that is not admissible, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured budget (enumeration count, MIS vertices, 3^N / 5^n caps) would
/// be exceeded. Never a silent truncation.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search that is guaranteed to succeed on valid input came back empty.
/// This is a defect (or a counterexample to a published claim) and must
/// surface loudly.
class SearchFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A valid input on which a search backed by a published size law failed.
/// Kept distinct so callers can report it as a finding, not a crash.
class ResearchArtifact : public SearchFailure {
 public:
  using SearchFailure::SearchFailure;
};

/// Norm description cannot define a norm (functionals/points do not span).
class DegenerateSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Error raised inside a separation pipeline, tagged with the stage name.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string stage, const std::string& what, bool budget = false)
      : std::runtime_error(stage + ": " + what), stage_(std::move(stage)), budget_(budget) {}
  const std::string& stage() const noexcept { return stage_; }
  /// The stage stopped on a BudgetExceeded.
  bool budget() const noexcept { return budget_; }

 private:
  std::string stage_;
  bool budget_ = false;
};

}  // namespace kottman
