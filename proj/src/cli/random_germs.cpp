#include "plcurve/cli/random_germs.hpp"

#include <algorithm>
#include <vector>

#include "plcurve/branch_analysis.hpp"
#include "plcurve/errors.hpp"
#include "plcurve/implicit_oracle.hpp"

namespace plcurve::cli {
namespace {

std::vector<Term> random_coordinate(SplitMix64& rng, const RandomGermSpec& spec) {
  std::vector<Term> terms;
  auto count = rng.uniform(0, static_cast<std::int64_t>(spec.max_terms));
  std::vector<std::size_t> used;
  for (std::int64_t i = 0; i < count; ++i) {
    auto exponent = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(spec.max_exponent)));
    std::int64_t c = 0;
    while (c == 0) c = rng.uniform(-spec.coefficient_bound, spec.coefficient_bound);
    if (std::find(used.begin(), used.end(), exponent) != used.end()) continue;
    used.push_back(exponent);
    terms.push_back({Rat(c), exponent});
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  return terms;
}

bool acceptable(const CurveGerm& germ) {
  for (const auto& b : germ.branches) {
    if (b.x_terms().empty() && b.y_terms().empty()) return false;
    if (b.exponent_gcd() != 1) return false;
    if (returns_to_origin(b)) return false;
  }
  try {
    return validate_germ(germ).valid();
  } catch (const AnalysisError& e) {
    // A disagreement inside validation is a finding, not a reason to resample.
    if (e.kind() == ErrorKind::inconsistent) return true;
    return false;
  }
}

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} - span + 1) % span;
  std::uint64_t v = next();
  while (span != 0 && v < limit) v = next();
  return lo + static_cast<std::int64_t>(span == 0 ? v : v % span);
}

std::uint64_t item_seed(std::uint64_t batch_seed, std::size_t index) {
  SplitMix64 mix(batch_seed ^ (0xd1b54a32d192ed03ULL * (index + 1)));
  return mix.next();
}

CurveGerm random_germ(std::uint64_t seed, const RandomGermSpec& spec, const std::string& name) {
  SplitMix64 rng(seed);
  for (;;) {
    CurveGerm germ;
    germ.name = name;
    auto r = rng.uniform(1, static_cast<std::int64_t>(spec.max_branches));
    for (std::int64_t i = 0; i < r; ++i) {
      std::vector<Term> x = random_coordinate(rng, spec);
      std::vector<Term> y = random_coordinate(rng, spec);
      germ.branches.push_back(Branch::polynomial("b" + std::to_string(i + 1), x, y));
    }
    if (acceptable(germ)) return germ;
  }
}

}  // namespace plcurve::cli
