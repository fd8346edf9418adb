#include "plcurve/cli/commands.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "plcurve/cli/documents.hpp"
#include "plcurve/cli/parallel.hpp"
#include "plcurve/errors.hpp"
#include "plcurve/euler_ledger.hpp"

namespace plcurve::cli {
namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixed(double value, int digits) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << value;
  return out.str();
}

void report_error(std::ostream& err, const AnalysisError& e) {
  err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
}

bool nodes_only(const StratumTable& t) {
  if (t.n != 2 || !t.isolated) return false;
  for (const auto& [k, chi] : t.chi_xk) {
    if (k != 2 && chi != 0) return false;
  }
  for (auto v : t.upstairs) {
    if (v != 0) return false;
  }
  return true;
}

std::string signed_term(std::int64_t v) { return v < 0 ? "(" + std::to_string(v) + ")" : std::to_string(v); }

const char* status_name(ItemStatus s) {
  switch (s) {
    case ItemStatus::passed: return "pass";
    case ItemStatus::skipped: return "skipped";
    case ItemStatus::mismatch: return "MISMATCH";
    case ItemStatus::error: return "ERROR";
  }
  return "?";
}

}  // namespace

int exit_code_for(const AnalysisError& e) {
  return e.kind() == ErrorKind::inconsistent ? kExitInconsistent : kExitInputError;
}

int cmd_analyze(const AnalyzeCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    GermDocument doc = parse_germ_document(read_file(cmd.path));
    AnalyzeOptions options;
    options.oracle = cmd.oracle;
    if (doc.precision_hint) options.precision.start = *doc.precision_hint;
    if (cmd.precision) options.precision.start = *cmd.precision;
    if (cmd.cap) options.precision.cap = *cmd.cap;
    if (cmd.oracle_cap) options.oracle_policy.cap = *cmd.oracle_cap;
    if (options.precision.start == 0 || options.precision.start > options.precision.cap) {
      throw AnalysisError(ErrorKind::invalid_input, "starting precision must lie in [1, cap]");
    }
    Report report = build_report(doc.germ, options);
    out << (cmd.format == Format::json ? render_json(report, cmd.timing) : render_text(report));
    if (!report.consistent()) {
      err << "inconsistent: at least one cross-check failed for '" << doc.germ.name << "'\n";
      return kExitInconsistent;
    }
    return kExitOk;
  } catch (const AnalysisError& e) {
    report_error(err, e);
    return exit_code_for(e);
  }
}

int cmd_euler(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    StratumTable t = parse_ledger_document(read_file(path));
    std::int64_t upstairs = 0;
    for (auto v : t.upstairs) upstairs += (t.isolated && t.n % 2 == 0) ? -v : v;
    std::int64_t hyper = multiple_point_euler(t);
    std::int64_t reduced = reduced_hyper_euler(t.r, hyper);
    std::int64_t chi = euler_star(t);
    out << "table: n = " << t.n << ", r = " << t.r << (t.isolated ? ", isolated" : "") << "\n";
    out << "chi~(M_h,0) = " << chi << "\n";
    out << "reduced Euler bookkeeping: chi(D; N) = sum (k-1) chi(X_k) = " << hyper << ", (r-1)-reduced = "
        << reduced << ", sum chi~(upstairs) - reduced = " << upstairs << " - " << signed_term(reduced) << " = "
        << upstairs - reduced << "\n";
    if (t.isolated) {
      std::int64_t mu = mu_isolated(t);
      out << "mu_0(h) = " << mu << "\n";
      if (nodes_only(t)) {
        auto it = t.chi_xk.find(2);
        std::int64_t delta = it == t.chi_xk.end() ? 0 : it->second;
        std::int64_t expected = unfolding_mu_plane_curve(t.r, delta);
        out << "companion: mu(g_0) = mu_0(h) + delta = " << mu << " + " << delta << " = " << mu + delta
            << " (2*delta - r + 1 = " << expected << ")\n";
        if (mu + delta != expected) {
          err << "inconsistent: nodes-only decomposition fails\n";
          return kExitInconsistent;
        }
      }
    }
    return kExitOk;
  } catch (const AnalysisError& e) {
    report_error(err, e);
    return exit_code_for(e);
  }
}

std::vector<CorpusRow> verify_corpus(const std::vector<CorpusEntry>& corpus, const std::string& filter,
                                     std::size_t jobs) {
  std::vector<const CorpusEntry*> selected;
  for (const auto& e : corpus) {
    if (filter.empty() || e.germ.name == filter) selected.push_back(&e);
  }
  return parallel_map<CorpusRow>(selected.size(), jobs, [&](std::size_t i) {
    const CorpusEntry& e = *selected[i];
    auto start = std::chrono::steady_clock::now();
    CorpusRow row;
    row.name = e.germ.name;
    try {
      AnalyzeOptions options;
      options.oracle = true;
      Report report = build_report(e.germ, options);
      const InvariantReport& inv = report.invariants;
      row.r = inv.r;
      row.delta = inv.delta_total;
      row.cokernel_delta = inv.cokernel_delta;
      row.mu = inv.mu_parameterized;
      row.ledger_mu = report.ledger.recovered_mu;
      row.oracle_mu = inv.oracle_mu.value_or(0);
      std::ostringstream why;
      auto expect = [&](const char* what, std::int64_t expected, std::int64_t got) {
        if (expected != got) why << (why.tellp() ? "; " : "") << what << ": expected " << expected << ", got " << got;
      };
      expect("r", static_cast<std::int64_t>(e.r), static_cast<std::int64_t>(row.r));
      expect("delta", static_cast<std::int64_t>(e.delta), static_cast<std::int64_t>(row.delta));
      expect("cokernel delta", static_cast<std::int64_t>(e.delta), static_cast<std::int64_t>(row.cokernel_delta));
      expect("mu", e.mu, row.mu);
      expect("ledger mu", e.mu, row.ledger_mu);
      expect("oracle mu", e.mu, static_cast<std::int64_t>(row.oracle_mu));
      row.failure = why.str();
      row.passed = row.failure.empty() && report.consistent();
      if (row.failure.empty() && !row.passed) row.failure = "a cross-check failed";
    } catch (const AnalysisError& e) {
      row.failure = std::string(to_string(e.kind())) + ": " + e.what();
    }
    row.seconds = seconds_since(start);
    return row;
  });
}

int cmd_verify_corpus(const std::vector<CorpusEntry>& corpus, const std::string& filter, std::size_t jobs,
                      std::ostream& out, std::ostream& err) {
  std::vector<CorpusRow> rows = verify_corpus(corpus, filter, jobs);
  if (rows.empty()) {
    err << "error: no corpus germ named '" << filter << "'\n";
    return kExitInputError;
  }
  out << std::left << std::setw(18) << "name" << std::setw(4) << "r" << std::setw(7) << "delta" << std::setw(10)
      << "cokernel" << std::setw(5) << "mu" << std::setw(8) << "ledger" << std::setw(8) << "oracle"
      << "verdict\n";
  std::size_t passed = 0;
  for (const auto& row : rows) {
    out << std::left << std::setw(18) << row.name << std::setw(4) << row.r << std::setw(7) << row.delta
        << std::setw(10) << row.cokernel_delta << std::setw(5) << row.mu << std::setw(8) << row.ledger_mu
        << std::setw(8) << row.oracle_mu << (row.passed ? "pass" : "FAIL") << "\n";
    if (row.passed) {
      ++passed;
    } else {
      err << "mismatch in '" << row.name << "': " << row.failure << "\n";
    }
  }
  out << passed << "/" << rows.size() << " corpus germs passed\n";
  return passed == rows.size() ? kExitOk : kExitInconsistent;
}

RandomItem check_random_item(std::size_t index, const RandomCheckOptions& options) {
  RandomItem item;
  item.index = index;
  item.seed = item_seed(options.seed, index);
  CurveGerm germ = random_germ(item.seed, options.spec,
                               "random-" + std::to_string(options.seed) + "-" + std::to_string(index));
  item.germ_json = serialize_germ_document({germ, std::nullopt}, false);
  item.r = germ.r();

  std::vector<std::string> skips;
  std::vector<std::string> mismatches;
  auto classify = [&](const AnalysisError& e, const std::string& channel) {
    switch (e.kind()) {
      case ErrorKind::undetermined: skips.push_back(channel + ": " + e.what()); break;
      case ErrorKind::inconsistent: mismatches.push_back(channel + ": " + e.what()); break;
      default: throw;
    }
  };
  try {
    PrecisionPolicy precision;
    precision.cap = options.precision_cap;
    try {
      MilnorFromDelta m = milnor_from_delta(germ, precision);
      item.delta = m.delta;
      item.mu = m.mu;
    } catch (const AnalysisError& e) {
      classify(e, "delta");
      item.status = mismatches.empty() ? ItemStatus::skipped : ItemStatus::mismatch;
      item.detail = mismatches.empty() ? skips.front() : mismatches.front();
      return item;
    }
    try {
      item.cokernel_delta = cokernel_dimension(germ, precision).dimension;
      if (*item.cokernel_delta != item.delta) {
        mismatches.push_back("delta_total " + std::to_string(item.delta) + " != cokernel " +
                             std::to_string(*item.cokernel_delta));
      }
    } catch (const AnalysisError& e) {
      classify(e, "cokernel");
    }
    try {
      OraclePolicy oracle;
      oracle.cap = options.oracle_cap;
      item.oracle_mu = milnor_implicit(implicitize_curve(germ).g, oracle).dimension;
      if (static_cast<std::int64_t>(*item.oracle_mu) != item.mu) {
        mismatches.push_back("2*delta - r + 1 = " + std::to_string(item.mu) + " != oracle " +
                             std::to_string(*item.oracle_mu));
      }
    } catch (const AnalysisError& e) {
      classify(e, "oracle");
    }
  } catch (const AnalysisError& e) {
    item.status = ItemStatus::error;
    item.detail = std::string(to_string(e.kind())) + ": " + e.what();
    return item;
  }
  if (!mismatches.empty()) {
    item.status = ItemStatus::mismatch;
    item.detail = mismatches.front();
  } else if (!skips.empty()) {
    item.status = ItemStatus::skipped;
    item.detail = skips.front();
  }
  return item;
}

RandomCheckSummary random_check(const RandomCheckOptions& options) {
  if (options.count == 0) throw AnalysisError(ErrorKind::invalid_input, "--count must be at least 1");
  auto start = std::chrono::steady_clock::now();
  RandomCheckSummary summary;
  summary.items = parallel_map<RandomItem>(options.count, options.jobs,
                                           [&](std::size_t i) { return check_random_item(i, options); });
  for (const auto& item : summary.items) {
    summary.cokernel_checked += item.cokernel_delta.has_value();
    summary.oracle_checked += item.oracle_mu.has_value();
    switch (item.status) {
      case ItemStatus::passed: ++summary.passed; break;
      case ItemStatus::skipped: ++summary.skipped; break;
      case ItemStatus::mismatch: ++summary.mismatches; break;
      case ItemStatus::error: ++summary.errors; break;
    }
  }
  summary.seconds = seconds_since(start);
  return summary;
}

int cmd_random_check(const RandomCheckOptions& options, std::ostream& out, std::ostream& err) {
  RandomCheckSummary summary;
  try {
    summary = random_check(options);
  } catch (const AnalysisError& e) {
    report_error(err, e);
    return exit_code_for(e);
  }
  out << "random-check count " << options.count << ", seed " << options.seed << ", precision cap "
      << options.precision_cap << ", oracle degree cap " << options.oracle_cap << "\n";
  auto optional_str = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  for (const auto& item : summary.items) {
    out << "  #" << item.index << " r=" << item.r << " delta=" << item.delta << " cokernel="
        << optional_str(item.cokernel_delta) << " mu=" << item.mu << " oracle=" << optional_str(item.oracle_mu)
        << " " << status_name(item.status);
    if (item.status == ItemStatus::passed) {
      out << "\n";
      continue;
    }
    out << ": " << item.detail << "\n";
    out << "    replay: " << item.germ_json << "\n";
    if (item.status == ItemStatus::mismatch || item.status == ItemStatus::error) {
      err << status_name(item.status) << " on item " << item.index << ": " << item.detail << "\n"
          << "  germ: " << item.germ_json << "\n";
    }
  }
  double skip_percent = 100.0 * static_cast<double>(summary.skipped) / static_cast<double>(options.count);
  out << "passed " << summary.passed << ", skipped " << summary.skipped << " (" << fixed(skip_percent, 1)
      << "%), mismatches " << summary.mismatches << ", errors " << summary.errors << "\n";
  out << "channels checked: cokernel " << summary.cokernel_checked << "/" << options.count << ", oracle "
      << summary.oracle_checked << "/" << options.count << "\n";
  out << "elapsed " << fixed(summary.seconds, 2) << " s\n";
  if (summary.mismatches > 0) return kExitInconsistent;
  if (summary.errors > 0) return kExitInputError;
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of parameterized plane curve germs"};
  app.require_subcommand(1);

  AnalyzeCommand analyze;
  std::string format = "text";
  auto* analyze_cmd = app.add_subcommand("analyze", "Invariants of the germ in a JSON germ file");
  analyze_cmd->add_option("file", analyze.path, "Germ document")->required();
  analyze_cmd->add_flag("--oracle", analyze.oracle, "Also run the implicit-equation oracle");
  analyze_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("--precision", analyze.precision, "Starting precision")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--cap", analyze.cap, "Precision cap")->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--oracle-cap", analyze.oracle_cap, "Degree cap of the oracle")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_flag("--timing", analyze.timing, "Include wall time in JSON output");

  std::string ledger_path;
  auto* euler_cmd = app.add_subcommand("euler", "Evaluate the Euler ledger of a stratum table");
  euler_cmd->add_option("file", ledger_path, "Ledger document")->required();

  std::string filter;
  std::size_t jobs = default_jobs();
  auto* corpus_cmd = app.add_subcommand("verify-corpus", "Check the embedded classical corpus");
  corpus_cmd->add_option("--filter", filter, "Only the germ with this name");
  corpus_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  RandomCheckOptions random;
  random.jobs = default_jobs();
  auto* random_cmd = app.add_subcommand("random-check", "Cross-check the channels on random germs");
  random_cmd->add_option("--count", random.count, "Number of germs")->required();
  random_cmd->add_option("--seed", random.seed, "Batch seed");
  random_cmd->add_option("--cap", random.precision_cap, "Precision cap")->check(CLI::PositiveNumber);
  random_cmd->add_option("--oracle-cap", random.oracle_cap, "Degree cap of the oracle")->check(CLI::PositiveNumber);
  random_cmd->add_option("--jobs", random.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  if (analyze_cmd->parsed()) {
    analyze.format = format == "json" ? Format::json : Format::text;
    return cmd_analyze(analyze, out, err);
  }
  if (euler_cmd->parsed()) return cmd_euler(ledger_path, out, err);
  if (corpus_cmd->parsed()) return cmd_verify_corpus(classical_corpus(), filter, jobs, out, err);
  return cmd_random_check(random, out, err);
}

}  // namespace plcurve::cli
