#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

namespace polybranch {

// Index of a cohomology generator g_{m,k}; its weight m + k is the exponent
// it contributes to the vanishing relation 2^{sum} > d.
struct GeneratorPair {
  int m = 1;
  int k = 0;

  int weight() const { return m + k; }
  // Cohomological degree 2^k * 2^{m-1}; documentation only.
  std::uint64_t cohomology_degree() const { return std::uint64_t{1} << (m + k - 1); }

  friend bool operator==(const GeneratorPair&, const GeneratorPair&) = default;
};

struct CupLengthCertificate {
  std::uint64_t d = 0;
  double budget = 0.0;  // log2(d)
  std::vector<GeneratorPair> pairs;
  int total_weight = 0;

  std::size_t cardinality() const { return pairs.size(); }
};

// (log2 d)^{2/3} - 1. Throws std::domain_error for d < 2.
double smale_bound(std::uint64_t d);

// Number of pairs (m >= 1, k >= 0) with m + k <= N, i.e. N(N+1)/2.
std::uint64_t pairs_within_weight(std::uint64_t N);

// floor(log2 d) for d >= 1, exact for every 64-bit d.
int integer_budget(std::uint64_t d);

// Largest set of distinct pairs with total weight <= log2 d. Greedy by
// ascending weight, ties by ascending m; the weight-w class holds exactly w
// pairs, so cheapest-first is optimal for cardinality.
CupLengthCertificate max_cup_length(std::uint64_t d);

// cardinality(max_cup_length(d)) >= (log2 d)^{2/3}. Exact integer comparison
// when d is a power of two.
bool verify_lemma_claim(std::uint64_t d);

// Distinctness and budget re-checked from scratch.
bool certificate_valid(const CupLengthCertificate& c);

nlohmann::json to_json(const CupLengthCertificate& c);

}  // namespace polybranch
