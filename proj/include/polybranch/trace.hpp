#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace polybranch {

struct Decision {
  std::string label;
  bool predicate_value = false;
};

// Execution log of the decision nodes met along one path of a solver's
// computation tree. Its length is the measured topological complexity of
// that path. Newton loop exits are deliberately not recorded: the iteration
// cap makes them bounded straight-line code, and only seed choice branches.
class BranchTrace {
public:
  BranchTrace() = default;

  // A trace that accepts decisions but keeps nothing; used to check that
  // tracing never changes numerical results.
  static BranchTrace disabled();

  // Appends one record and hands the predicate back, so a decision can sit
  // inline in an `if`.
  bool record(std::string_view label, bool predicate);

  void count_computation(std::size_t n = 1) { computation_count_ += n; }

  std::size_t size() const { return decisions_.size(); }
  bool recording() const { return recording_; }
  std::size_t computation_count() const { return computation_count_; }
  std::span<const Decision> decisions() const { return decisions_; }

private:
  std::vector<Decision> decisions_;
  std::size_t computation_count_ = 0;
  bool recording_ = true;
};

inline bool record_decision(BranchTrace& trace, std::string_view label, bool predicate) {
  return trace.record(label, predicate);
}

// Max decision count over a set of executions. Throws on an empty set.
std::size_t worst_case_branches(std::span<const BranchTrace> traces);

// Number of distinct decision labels seen across all traces. Reported next
// to the per-path maximum since the two notions of complexity differ for a
// branching tree.
std::size_t distinct_labels(std::span<const BranchTrace> traces);

struct ComplexityReport {
  int degree = 0;
  std::size_t measured_branches = 0;
  double smale_lower_bound = 0.0;
  bool bound_satisfied = false;
};

// Throws std::domain_error("bound undefined") for degree < 2.
ComplexityReport make_report(int degree, std::size_t measured);

nlohmann::json to_json(const ComplexityReport& r);

}  // namespace polybranch
