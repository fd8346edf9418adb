#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "plcurve/cli/commands.hpp"
#include "plcurve/cli/documents.hpp"
#include "plcurve/errors.hpp"
#include "support.hpp"

using namespace plcurve;
using namespace plcurve::cli;
using namespace plcurve::testing;

namespace {

const std::string kData = PLCURVE_DATA_DIR;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "plcurve");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("plcurve_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

std::string parse_error(const std::string& text) {
  try {
    parse_germ_document(text);
  } catch (const AnalysisError& e) {
    CHECK(e.kind() == ErrorKind::invalid_input);
    return e.what();
  }
  return "";
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// Drops the elapsed-time line of a random-check summary.
std::string without_timing(const std::string& s) {
  return s.substr(0, s.find("elapsed"));
}

}  // namespace

TEST_CASE("germ documents parse with exact rationals") {
  GermDocument doc = parse_germ_document(R"({"name": "g", "precision_hint": 24, "branches": [
      {"label": "p", "x": [[3, 6, 2]], "y": [["-123456789012345678901", 1, 3], [5, 1, 4]]}]})");
  CHECK(doc.germ.name == "g");
  CHECK(doc.precision_hint == 24u);
  REQUIRE(doc.germ.r() == 1);
  CHECK(doc.germ.branches[0].label() == "p");
  CHECK(doc.germ.branches[0].x_terms().at(2) == Rat(1, 2));
  CHECK(doc.germ.branches[0].y_terms().at(3) == Rat::parse("-123456789012345678901"));
  CHECK(doc.germ.branches[0].is_polynomial());
  GermDocument unnamed = parse_germ_document(R"({"name": "g", "branches": [{"x": [[1,1,1]], "y": []}]})");
  CHECK(unnamed.germ.branches[0].label() == "b1");
}

TEST_CASE("germ documents round-trip") {
  for (const char* file : {"cusp.json", "node.json", "series_branch.json", "mixed.json"}) {
    GermDocument doc = parse_germ_document(read_file(kData + "/" + file));
    std::string text = serialize_germ_document(doc);
    GermDocument again = parse_germ_document(text);
    CHECK(same_document(doc, again));
    CHECK(serialize_germ_document(again) == text);
    CHECK(same_document(doc, parse_germ_document(serialize_germ_document(doc, false))));
  }
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GermDocument doc{random_germ(seed), std::nullopt};
    CHECK(same_document(doc, parse_germ_document(serialize_germ_document(doc))));
  }
  GermDocument big = parse_germ_document(
      R"({"name": "big", "branches": [{"x": [["98765432109876543210", "7", 1]], "y": [[1, 1, 2]]}]})");
  CHECK(same_document(big, parse_germ_document(serialize_germ_document(big))));
}

TEST_CASE("germ document errors point at the offending place") {
  CHECK(contains(parse_error("{\n  \"name\": \"g\",\n  \"branches\": [\n  ,]\n}"), "line 4"));
  std::string bad_den = parse_error(
      R"({"name": "g", "branches": [{"x": [[1,1,1]], "y": []}, {"label": "q", "x": [], "y": [[1, 0, 2]]}]})");
  CHECK(contains(bad_den, "branch 2 ('q'), y term 1"));
  CHECK(contains(bad_den, "denominator must be positive"));
  CHECK(contains(parse_error(R"({"name": "g", "branches": [{"x": [[1,1,1]], "y": [], "z": []}]})"),
                 "unknown field 'z'"));
  CHECK(contains(parse_error(R"({"name": "g", "branches": [{"x": [[1,1,1], [2,1,1]], "y": []}]})"),
                 "appears twice"));
  CHECK(contains(parse_error(R"({"name": "g", "branches": [{"x": [[1,1,9]], "y": [], "precision": 8}]})"),
                 "not below the precision"));
  CHECK(contains(parse_error(R"({"name": "g", "branches": [{"x": [[1.5,1,1]], "y": []}]})"), "numerator"));
  CHECK(contains(parse_error(R"({"branches": []})"), "name"));
  CHECK(contains(parse_error(R"({"name": "g", "branches": [{"x": [[1,1,-1]], "y": []}]})"), "exponent"));
}

TEST_CASE("ledger documents") {
  StratumTable t = parse_ledger_document(read_file(kData + "/crosscap.json"));
  CHECK(t.n == 2);
  CHECK(t.r == 1);
  CHECK(t.chi_xk.at(2) == 1);
  CHECK(t.isolated);
  CHECK(t.s == 0);
  StratumTable again = parse_ledger_document(serialize_ledger_document(t));
  CHECK(again.chi_xk == t.chi_xk);
  CHECK(again.upstairs == t.upstairs);
  CHECK(again.s == t.s);
  CHECK_THROWS_AS(parse_ledger_document(R"({"n": 2, "r": 1, "chi_Xk": {"two": 1}, "upstairs": [0]})"), AnalysisError);
  CHECK_THROWS_AS(parse_ledger_document(R"({"n": 2, "r": 2, "upstairs": [0]})"), AnalysisError);
  CHECK_THROWS_AS(parse_ledger_document(R"({"n": 2, "r": 1, "upstairs": [0], "isolated_flag": 1})"), AnalysisError);
}

TEST_CASE("analyze") {
  Run cusp = run({"analyze", kData + "/cusp.json", "--oracle", "--format", "json"});
  CHECK(cusp.code == kExitOk);
  CHECK(contains(cusp.out, "\"delta\": 1"));
  CHECK(contains(cusp.out, "\"mu\": 2"));
  CHECK(contains(cusp.out, "\"g\": \"y^2 - x^3\""));
  CHECK(contains(cusp.out, "\"consistent\": true"));
  CHECK_FALSE(contains(cusp.out, "wall_seconds"));

  Run node = run({"analyze", kData + "/node.json"});
  CHECK(node.code == kExitOk);
  CHECK(contains(node.out, "delta = 1"));
  CHECK(contains(node.out, "mu = 2*delta - r + 1 = 1"));

  Run bad = run({"analyze", kData + "/not_injective.json"});
  CHECK(bad.code == kExitInputError);
  CHECK(contains(bad.err, "not generically one-to-one"));

  Run series_oracle = run({"analyze", kData + "/series_branch.json", "--oracle"});
  CHECK(series_oracle.code == kExitInputError);
  CHECK(contains(series_oracle.err, "unsupported"));
  CHECK(run({"analyze", kData + "/series_branch.json"}).code == kExitOk);

  std::string e8 = temp_file("e8.json", R"({"name": "E8", "branches": [{"x": [[1,1,3]], "y": [[1,1,5]]}]})");
  Run capped = run({"analyze", e8, "--precision", "2", "--cap", "4"});
  CHECK(capped.code == kExitInputError);
  CHECK(contains(capped.err, "did not stabilize"));

  CHECK(run({"analyze", kData + "/missing.json"}).code == kExitInputError);
  CHECK(run({"analyze", kData + "/cusp.json", "--format", "xml"}).code == kExitInputError);
  std::string broken = temp_file("broken.json", "{\"name\": \"x\",\n\"branches\": [\n");
  Run syntax = run({"analyze", broken});
  CHECK(syntax.code == kExitInputError);
  CHECK(contains(syntax.err, "line"));
}

TEST_CASE("machine-readable reports are byte-identical across runs") {
  Run first = run({"analyze", kData + "/mixed.json", "--format", "json"});
  Run second = run({"analyze", kData + "/mixed.json", "--format", "json"});
  CHECK(first.code == kExitOk);
  CHECK(first.out == second.out);
  Run timed = run({"analyze", kData + "/cusp.json", "--format", "json", "--timing"});
  CHECK(contains(timed.out, "wall_seconds"));
}

TEST_CASE("euler") {
  Run crosscap = run({"euler", kData + "/crosscap.json"});
  CHECK(crosscap.code == kExitOk);
  CHECK(contains(crosscap.out, "chi~(M_h,0) = -1"));
  CHECK(contains(crosscap.out, "mu_0(h) = 1"));
  CHECK(contains(crosscap.out, "reduced Euler bookkeeping"));

  Run tacnode = run({"euler", kData + "/tacnode_unfolding.json"});
  CHECK(contains(tacnode.out, "mu_0(h) = 1"));
  CHECK(contains(tacnode.out, "mu(g_0) = mu_0(h) + delta = 1 + 2 = 3"));

  Run inconsistent = run({"euler", kData + "/inconsistent_table.json"});
  CHECK(inconsistent.code == kExitInconsistent);
  CHECK(contains(inconsistent.err, "inconsistent table"));

  std::string plain = temp_file("plain.json", R"({"n": 3, "r": 1, "upstairs": [4]})");
  Run passthrough = run({"euler", plain});
  CHECK(passthrough.code == kExitOk);
  CHECK(contains(passthrough.out, "chi~(M_h,0) = 4"));
  CHECK_FALSE(contains(passthrough.out, "mu_0"));

  std::string invalid = temp_file("invalid.json", R"({"n": 2, "r": 2, "upstairs": [0]})");
  CHECK(run({"euler", invalid}).code == kExitInputError);
}

TEST_CASE("verify-corpus") {
  Run all = run({"verify-corpus"});
  CHECK(all.code == kExitOk);
  CHECK(contains(all.out, "10/10 corpus germs passed"));

  Run cusp = run({"verify-corpus", "--filter", "cusp"});
  CHECK(cusp.code == kExitOk);
  CHECK(contains(cusp.out, "1/1 corpus germs passed"));
  std::size_t lines = 0;
  for (char c : cusp.out) lines += c == '\n';
  CHECK(lines == 3);

  CHECK(run({"verify-corpus", "--filter", "nonesuch"}).code == kExitInputError);

  std::vector<CorpusEntry> wrong = classical_corpus();
  wrong[2].mu = 3;
  std::ostringstream out;
  std::ostringstream err;
  CHECK(cmd_verify_corpus(wrong, "", 1, out, err) == kExitInconsistent);
  CHECK(contains(err.str(), "cusp"));
  CHECK(contains(err.str(), "expected 3, got 2"));
}

TEST_CASE("random-check") {
  Run zero = run({"random-check", "--count", "0"});
  CHECK(zero.code == kExitInputError);

  Run smooth = run({"random-check", "--count", "1", "--seed", "2"});
  CHECK(smooth.code == kExitOk);
  CHECK(contains(smooth.out, "r=1 delta=0 cokernel=0 mu=0 oracle=0 pass"));

  Run a = run({"random-check", "--count", "6", "--seed", "11", "--jobs", "1"});
  Run b = run({"random-check", "--count", "6", "--seed", "11", "--jobs", "3"});
  CHECK(a.code == kExitOk);
  CHECK(without_timing(a.out) == without_timing(b.out));
}

TEST_CASE("random germs are valid and reproducible") {
  RandomGermSpec spec;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    CurveGerm g = random_germ(seed, spec);
    CHECK(g.r() >= 1);
    CHECK(g.r() <= spec.max_branches);
    for (const auto& b : g.branches) {
      for (const auto* terms : {&b.x_terms(), &b.y_terms()}) {
        for (const auto& [e, c] : *terms) {
          CHECK(e >= 1);
          CHECK(e <= spec.max_exponent);
          CHECK(c.is_integer());
          CHECK_FALSE(c.is_zero());
          CHECK(Rat(-spec.coefficient_bound) < c + Rat(1));
          CHECK(c < Rat(spec.coefficient_bound + 1));
        }
      }
    }
    CHECK(serialize_germ_document({g, std::nullopt}) == serialize_germ_document({random_germ(seed, spec), std::nullopt}));
  }
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
}
