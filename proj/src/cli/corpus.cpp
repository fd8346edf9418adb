#include "plcurve/cli/corpus.hpp"

namespace plcurve::cli {
namespace {

Branch monomial_branch(const std::string& label, long cx, std::size_t ex, long cy, std::size_t ey) {
  std::vector<Term> x;
  std::vector<Term> y;
  if (cx != 0) x.push_back({Rat(cx), ex});
  if (cy != 0) y.push_back({Rat(cy), ey});
  return Branch::polynomial(label, x, y);
}

Branch line(const std::string& label, long a, long b) { return monomial_branch(label, a, 1, b, 1); }

CorpusEntry entry(std::string name, std::vector<Branch> branches, std::size_t r, std::size_t delta,
                  std::int64_t mu) {
  return CorpusEntry{CurveGerm{std::move(name), std::move(branches)}, r, delta, mu};
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> c;
  c.push_back(entry("smooth", {monomial_branch("a", 1, 1, 1, 2)}, 1, 0, 0));
  c.push_back(entry("node", {line("a", 1, 0), line("b", 0, 1)}, 2, 1, 1));
  c.push_back(entry("cusp", {monomial_branch("a", 1, 2, 1, 3)}, 1, 1, 2));
  c.push_back(entry("tacnode", {monomial_branch("a", 1, 1, 1, 2), monomial_branch("b", 1, 1, -1, 2)}, 2, 2, 3));
  c.push_back(entry("A4", {monomial_branch("a", 1, 2, 1, 5)}, 1, 2, 4));
  c.push_back(entry("A6", {monomial_branch("a", 1, 2, 1, 7)}, 1, 3, 6));
  c.push_back(entry("E6", {monomial_branch("a", 1, 3, 1, 4)}, 1, 3, 6));
  c.push_back(entry("E8", {monomial_branch("a", 1, 3, 1, 5)}, 1, 4, 8));
  c.push_back(entry("triple-point", {line("a", 1, 0), line("b", 0, 1), line("c", 1, 1)}, 3, 3, 4));
  c.push_back(entry("quadruple-point",
                    {line("a", 1, 0), line("b", 0, 1), line("c", 1, 1), line("d", 1, -1)}, 4, 6, 9));
  return c;
}

}  // namespace

const std::vector<CorpusEntry>& classical_corpus() {
  static const std::vector<CorpusEntry> corpus = build();
  return corpus;
}

}  // namespace plcurve::cli
