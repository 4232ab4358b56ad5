#include "polybranch/complexity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>

namespace polybranch {

double smale_bound(std::uint64_t d) {
  if (d < 2) {
    throw std::domain_error("smale_bound: d must be >= 2");
  }
  const double l = std::log2(static_cast<double>(d));
  // cbrt(l^2) rather than pow(l, 2/3.): 2/3 is not representable and pow
  // would miss exact cases such as d = 256.
  return std::cbrt(l * l) - 1.0;
}

std::uint64_t pairs_within_weight(std::uint64_t N) { return N * (N + 1) / 2; }

int integer_budget(std::uint64_t d) {
  if (d == 0) {
    throw std::domain_error("integer_budget: d must be >= 1");
  }
  return static_cast<int>(std::bit_width(d)) - 1;
}

CupLengthCertificate max_cup_length(std::uint64_t d) {
  if (d < 2) {
    throw std::domain_error("max_cup_length: d must be >= 2");
  }
  CupLengthCertificate c;
  c.d = d;
  c.budget = std::log2(static_cast<double>(d));
  const int budget = integer_budget(d);
  for (int w = 1; c.total_weight + w <= budget; ++w) {
    for (int m = 1; m <= w && c.total_weight + w <= budget; ++m) {
      c.pairs.push_back(GeneratorPair{m, w - m});
      c.total_weight += w;
    }
  }
  return c;
}

bool verify_lemma_claim(std::uint64_t d) {
  const auto card = static_cast<std::uint64_t>(max_cup_length(d).cardinality());
  if (std::has_single_bit(d)) {
    const auto j = static_cast<std::uint64_t>(integer_budget(d));
    return card * card * card >= j * j;
  }
  const double l = std::log2(static_cast<double>(d));
  return static_cast<double>(card) >= std::cbrt(l * l);
}

bool certificate_valid(const CupLengthCertificate& c) {
  std::set<std::pair<int, int>> seen;
  int total = 0;
  for (const auto& p : c.pairs) {
    if (p.m < 1 || p.k < 0 || !seen.emplace(p.m, p.k).second) {
      return false;
    }
    total += p.weight();
  }
  return total == c.total_weight && total <= integer_budget(c.d);
}

nlohmann::json to_json(const CupLengthCertificate& c) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : c.pairs) {
    pairs.push_back({p.m, p.k});
  }
  return nlohmann::json{{"d", c.d},
                        {"budget", c.budget},
                        {"pairs", pairs},
                        {"total_weight", c.total_weight},
                        {"cardinality", c.cardinality()},
                        {"smale_bound", smale_bound(c.d)}};
}

}  // namespace polybranch
