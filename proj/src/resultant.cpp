#include "plcurve/resultant.hpp"

#include <utility>

#include "plcurve/errors.hpp"

namespace plcurve {

UniPolyOverBivar::UniPolyOverBivar(std::vector<BivarPoly> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
  if (coefficients_.empty()) {
    throw AnalysisError(ErrorKind::invalid_input, "resultant operand is the zero polynomial");
  }
}

BivarPoly bareiss_determinant(std::vector<std::vector<BivarPoly>> m) {
  const std::size_t size = m.size();
  if (size == 0) return BivarPoly::constant(Rat(1));
  bool negate = false;
  BivarPoly previous = BivarPoly::constant(Rat(1));
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < size && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == size) return {};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        BivarPoly numerator = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = divide_exact(numerator, previous);
      }
      m[i][k] = BivarPoly{};
    }
    previous = m[k][k];
  }
  BivarPoly det = m[size - 1][size - 1];
  return negate ? -det : det;
}

BivarPoly sylvester_resultant(const UniPolyOverBivar& p, const UniPolyOverBivar& q) {
  const std::size_t m = p.degree();
  const std::size_t n = q.degree();
  if (m == 0 && n == 0) {
    throw AnalysisError(ErrorKind::invalid_input, "resultant of two constants is undefined");
  }
  if (m == 0) return pow(p.coefficients()[0], static_cast<unsigned>(n));
  if (n == 0) return pow(q.coefficients()[0], static_cast<unsigned>(m));

  const std::size_t size = m + n;
  std::vector<std::vector<BivarPoly>> matrix(size, std::vector<BivarPoly>(size));
  for (std::size_t row = 0; row < n; ++row) {
    for (std::size_t k = 0; k <= m; ++k) matrix[row][row + (m - k)] = p.coefficients()[k];
  }
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t k = 0; k <= n; ++k) matrix[n + row][row + (n - k)] = q.coefficients()[k];
  }
  return bareiss_determinant(std::move(matrix));
}

}  // namespace plcurve
