#include "polybranch/trace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "polybranch/complexity.hpp"

namespace polybranch {

BranchTrace BranchTrace::disabled() {
  BranchTrace t;
  t.recording_ = false;
  return t;
}

bool BranchTrace::record(std::string_view label, bool predicate) {
  if (recording_) {
    decisions_.push_back(Decision{std::string(label), predicate});
  }
  return predicate;
}

std::size_t worst_case_branches(std::span<const BranchTrace> traces) {
  if (traces.empty()) {
    throw std::invalid_argument("no traces");
  }
  std::size_t worst = 0;
  for (const auto& t : traces) {
    worst = std::max(worst, t.size());
  }
  return worst;
}

std::size_t distinct_labels(std::span<const BranchTrace> traces) {
  std::set<std::string> labels;
  for (const auto& t : traces) {
    for (const auto& d : t.decisions()) {
      labels.insert(d.label);
    }
  }
  return labels.size();
}

ComplexityReport make_report(int degree, std::size_t measured) {
  if (degree < 2) {
    throw std::domain_error("bound undefined");
  }
  ComplexityReport r;
  r.degree = degree;
  r.measured_branches = measured;
  r.smale_lower_bound = smale_bound(degree);
  r.bound_satisfied = static_cast<double>(measured) > r.smale_lower_bound;
  return r;
}

nlohmann::json to_json(const ComplexityReport& r) {
  return nlohmann::json{{"degree", r.degree},
                        {"measured_branches", r.measured_branches},
                        {"smale_lower_bound", r.smale_lower_bound},
                        {"bound_satisfied", r.bound_satisfied}};
}

}  // namespace polybranch
