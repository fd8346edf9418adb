#include "plcurve/cli/documents.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "plcurve/errors.hpp"

namespace plcurve::cli {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw AnalysisError(ErrorKind::invalid_input, where.empty() ? what : where + ": " + what);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    fail("line " + std::to_string(line) + ", column " + std::to_string(column), "malformed document");
  }
}

void reject_unknown_keys(const json& object, std::initializer_list<const char*> allowed, const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail(where, "unknown field '" + key + "'");
  }
}

std::string integer_text(const json& value, const std::string& where) {
  if (value.is_number_integer()) return value.dump();
  if (value.is_string()) return value.get<std::string>();
  fail(where, "expected an integer or a string of digits");
}

std::size_t natural(const json& value, const std::string& where) {
  if (!value.is_number_unsigned()) fail(where, "expected a nonnegative integer");
  return value.get<std::size_t>();
}

std::int64_t integer(const json& value, const std::string& where) {
  if (!value.is_number_integer()) fail(where, "expected an integer");
  if (value.is_number_unsigned() && value.get<std::uint64_t>() > std::numeric_limits<std::int64_t>::max()) {
    fail(where, "integer out of range");
  }
  return value.get<std::int64_t>();
}

std::vector<Term> parse_terms(const json& list, const std::string& where) {
  if (!list.is_array()) fail(where, "expected a list of [numerator, denominator, exponent] terms");
  std::vector<Term> terms;
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = where + " term " + std::to_string(i + 1);
    const json& t = list[i];
    if (!t.is_array() || t.size() != 3) fail(at, "expected [numerator, denominator, exponent]");
    Rat den = Rat::parse(integer_text(t[1], at + " denominator"));
    if (den.sign() <= 0) fail(at, "denominator must be positive");
    Rat num = Rat::parse(integer_text(t[0], at + " numerator"));
    std::size_t exponent = natural(t[2], at + " exponent");
    if (!seen.insert(exponent).second) fail(at, "exponent " + std::to_string(exponent) + " appears twice");
    if (num.is_zero()) continue;
    terms.push_back({num / den, exponent});
  }
  return terms;
}

TruncatedSeries series_from(const std::vector<Term>& terms, std::size_t precision, const std::string& where) {
  std::vector<std::pair<std::size_t, Rat>> pairs;
  for (const auto& t : terms) {
    if (t.exponent >= precision) {
      fail(where, "exponent " + std::to_string(t.exponent) + " is not below the precision " +
                      std::to_string(precision));
    }
    pairs.emplace_back(t.exponent, t.coefficient);
  }
  return TruncatedSeries(pairs, precision);
}

Branch parse_branch(const json& b, std::size_t index) {
  std::string where = "branch " + std::to_string(index + 1);
  if (!b.is_object()) fail(where, "expected an object with fields x and y");
  std::string label = "b" + std::to_string(index + 1);
  if (b.contains("label")) {
    if (!b["label"].is_string() || b["label"].get<std::string>().empty()) fail(where, "label must be a nonempty string");
    label = b["label"].get<std::string>();
    where += " ('" + label + "')";
  }
  reject_unknown_keys(b, {"label", "x", "y", "precision"}, where);
  if (!b.contains("x") || !b.contains("y")) fail(where, "both x and y are required");
  std::vector<Term> x = parse_terms(b["x"], where + ", x");
  std::vector<Term> y = parse_terms(b["y"], where + ", y");
  if (!b.contains("precision")) return Branch::polynomial(label, x, y);
  std::size_t precision = natural(b["precision"], where + ", precision");
  if (precision == 0) fail(where, "precision must be positive");
  return Branch::series(label, series_from(x, precision, where + ", x"), series_from(y, precision, where + ", y"));
}

ordered_json integer_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

ordered_json terms_json(const TruncatedSeries::Terms& terms) {
  ordered_json list = ordered_json::array();
  for (const auto& [e, c] : terms) {
    list.push_back(ordered_json::array({integer_json(c.numerator()), integer_json(c.denominator()), e}));
  }
  return list;
}

}  // namespace

GermDocument parse_germ_document(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) fail("", "a germ document must be a JSON object");
  reject_unknown_keys(doc, {"name", "branches", "precision_hint"}, "document");
  GermDocument out;
  if (!doc.contains("name") || !doc["name"].is_string()) fail("document", "missing string field 'name'");
  out.germ.name = doc["name"].get<std::string>();
  if (doc.contains("precision_hint")) {
    out.precision_hint = natural(doc["precision_hint"], "precision_hint");
    if (*out.precision_hint == 0) fail("precision_hint", "must be positive");
  }
  if (!doc.contains("branches") || !doc["branches"].is_array()) fail("document", "missing list field 'branches'");
  std::set<std::string> labels;
  for (std::size_t i = 0; i < doc["branches"].size(); ++i) {
    Branch b = parse_branch(doc["branches"][i], i);
    if (!labels.insert(b.label()).second) fail("branch " + std::to_string(i + 1), "duplicate label '" + b.label() + "'");
    out.germ.branches.push_back(std::move(b));
  }
  return out;
}

std::string serialize_germ_document(const GermDocument& doc, bool pretty) {
  ordered_json out;
  out["name"] = doc.germ.name;
  if (doc.precision_hint) out["precision_hint"] = *doc.precision_hint;
  ordered_json branches = ordered_json::array();
  for (const auto& b : doc.germ.branches) {
    ordered_json entry;
    entry["label"] = b.label();
    entry["x"] = terms_json(b.x_terms());
    entry["y"] = terms_json(b.y_terms());
    if (!b.is_polynomial()) entry["precision"] = b.known_precision();
    branches.push_back(std::move(entry));
  }
  out["branches"] = std::move(branches);
  return pretty ? out.dump(2) + "\n" : out.dump();
}

bool same_document(const GermDocument& a, const GermDocument& b) {
  if (a.germ.name != b.germ.name || a.precision_hint != b.precision_hint) return false;
  if (a.germ.r() != b.germ.r()) return false;
  for (std::size_t i = 0; i < a.germ.r(); ++i) {
    const Branch& p = a.germ.branches[i];
    const Branch& q = b.germ.branches[i];
    if (p.label() != q.label() || !same_parameterization(p, q)) return false;
  }
  return true;
}

StratumTable parse_ledger_document(const std::string& text) {
  json doc = parse_json(text);
  if (!doc.is_object()) fail("", "a ledger document must be a JSON object");
  reject_unknown_keys(doc, {"n", "r", "chi_Xk", "upstairs", "isolated_flag", "s"}, "document");
  for (const char* key : {"n", "r", "upstairs"}) {
    if (!doc.contains(key)) fail("document", std::string("missing field '") + key + "'");
  }
  StratumTable t;
  t.n = integer(doc["n"], "n");
  t.r = integer(doc["r"], "r");
  if (doc.contains("chi_Xk")) {
    if (!doc["chi_Xk"].is_object()) fail("chi_Xk", "expected an object keyed by k");
    for (const auto& [key, value] : doc["chi_Xk"].items()) {
      std::int64_t k = 0;
      std::istringstream in(key);
      if (!(in >> k) || !in.eof()) fail("chi_Xk", "key '" + key + "' is not an integer");
      t.chi_xk[k] = integer(value, "chi_Xk[" + key + "]");
    }
  }
  if (!doc["upstairs"].is_array()) fail("upstairs", "expected a list of integers");
  for (std::size_t i = 0; i < doc["upstairs"].size(); ++i) {
    t.upstairs.push_back(integer(doc["upstairs"][i], "upstairs[" + std::to_string(i) + "]"));
  }
  if (doc.contains("isolated_flag")) {
    if (!doc["isolated_flag"].is_boolean()) fail("isolated_flag", "expected true or false");
    t.isolated = doc["isolated_flag"].get<bool>();
  }
  if (doc.contains("s")) t.s = integer(doc["s"], "s");
  validate_table(t);
  return t;
}

std::string serialize_ledger_document(const StratumTable& t) {
  ordered_json out;
  out["n"] = t.n;
  out["r"] = t.r;
  ordered_json chi = ordered_json::object();
  for (const auto& [k, v] : t.chi_xk) chi[std::to_string(k)] = v;
  out["chi_Xk"] = std::move(chi);
  out["upstairs"] = t.upstairs;
  out["isolated_flag"] = t.isolated;
  if (t.s) out["s"] = *t.s;
  return out.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw AnalysisError(ErrorKind::invalid_input, "cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace plcurve::cli
