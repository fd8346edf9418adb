#include "plcurve/echelon.hpp"

#include <deque>

namespace plcurve {
namespace {

// row -= factor * pivot_row, where both are sorted by column.
SparseRow subtract_multiple(const SparseRow& row, const Rat& factor, const SparseRow& pivot_row) {
  SparseRow out;
  out.reserve(row.size() + pivot_row.size());
  auto a = row.begin();
  auto b = pivot_row.begin();
  while (a != row.end() || b != pivot_row.end()) {
    if (b == pivot_row.end() || (a != row.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == row.end() || b->first < a->first) {
      Rat v(0);
      v.subtract_product(factor, b->second);
      out.emplace_back(b->first, std::move(v));
      ++b;
    } else {
      Rat v = a->second;
      v.subtract_product(factor, b->second);
      if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  return out;
}

}  // namespace

std::optional<std::size_t> EchelonBasis::insert(SparseRow row) {
  while (!row.empty()) {
    auto it = rows_.find(row.front().first);
    if (it == rows_.end()) break;
    Rat factor = row.front().second;
    row = subtract_multiple(row, factor, it->second);
  }
  if (row.empty()) return std::nullopt;
  Rat lead = row.front().second;
  if (lead != Rat(1)) {
    for (auto& [col, value] : row) value /= lead;
  }
  const std::size_t pivot = row.front().first;
  rows_.emplace(pivot, std::move(row));
  return pivot;
}

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& [pivot, row] : rows_) out.push_back(pivot);
  return out;
}

EchelonBasis span_closure(const std::vector<SparseRow>& seeds, const std::vector<RowMap>& maps) {
  // Maps are applied to the accepted rows as generated, not to their reduced
  // forms: both span the same space, and the generated rows keep small
  // coefficients where iterated reduced rows grow without bound.
  EchelonBasis basis;
  std::deque<SparseRow> pending;
  for (const auto& seed : seeds) {
    if (basis.insert(seed)) pending.push_back(seed);
  }
  while (!pending.empty()) {
    SparseRow source = std::move(pending.front());
    pending.pop_front();
    for (const auto& map : maps) {
      SparseRow image = map(source);
      if (basis.insert(image)) pending.push_back(std::move(image));
    }
  }
  return basis;
}

}  // namespace plcurve
