#ifndef PLCURVE_ECHELON_HPP
#define PLCURVE_ECHELON_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "plcurve/rat.hpp"

namespace plcurve {

/// Sparse vector over Q: (column, value) pairs sorted by column, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, Rat>>;

/// Row-echelon basis keyed by pivot (lowest nonzero column). Rows are
/// normalized so the pivot entry is 1.
class EchelonBasis {
 public:
  /// Reduces row against the basis. When it is independent of the rows
  /// already present it is kept and its pivot column is returned.
  std::optional<std::size_t> insert(SparseRow row);

  std::size_t rank() const { return rows_.size(); }
  const std::map<std::size_t, SparseRow>& rows() const { return rows_; }
  std::vector<std::size_t> pivots() const;

 private:
  std::map<std::size_t, SparseRow> rows_;
};

using RowMap = std::function<SparseRow(const SparseRow&)>;

/// Smallest subspace containing the seeds and closed under every map. Every
/// row that enlarged the basis is pushed through each map exactly once, in
/// FIFO order, so the resulting pivots are reproducible.
EchelonBasis span_closure(const std::vector<SparseRow>& seeds, const std::vector<RowMap>& maps);

}  // namespace plcurve

#endif  // PLCURVE_ECHELON_HPP
