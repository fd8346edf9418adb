#ifndef PLCURVE_CLI_COMMANDS_HPP
#define PLCURVE_CLI_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "plcurve/cli/corpus.hpp"
#include "plcurve/cli/random_germs.hpp"
#include "plcurve/cli/report.hpp"
#include "plcurve/errors.hpp"

namespace plcurve::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInconsistent = 2;

/// Exit code for an AnalysisError escaping a command.
int exit_code_for(const AnalysisError& e);

enum class Format { text, json };

struct AnalyzeCommand {
  std::string path;
  Format format = Format::text;
  bool timing = false;
  std::optional<std::size_t> precision;
  std::optional<std::size_t> cap;
  std::optional<std::size_t> oracle_cap;
  bool oracle = false;
};

int cmd_analyze(const AnalyzeCommand& cmd, std::ostream& out, std::ostream& err);
int cmd_euler(const std::string& path, std::ostream& out, std::ostream& err);

struct CorpusRow {
  std::string name;
  std::size_t r = 0;
  std::size_t delta = 0;
  std::size_t cokernel_delta = 0;
  std::int64_t mu = 0;
  std::int64_t ledger_mu = 0;
  std::size_t oracle_mu = 0;
  bool passed = false;
  std::string failure;
  double seconds = 0;
};

/// Runs every entry whose name equals filter (all entries when empty).
std::vector<CorpusRow> verify_corpus(const std::vector<CorpusEntry>& corpus, const std::string& filter,
                                     std::size_t jobs);
int cmd_verify_corpus(const std::vector<CorpusEntry>& corpus, const std::string& filter, std::size_t jobs,
                      std::ostream& out, std::ostream& err);

struct RandomCheckOptions {
  std::size_t count = 50;
  std::uint64_t seed = 1;
  std::size_t precision_cap = 64;
  std::size_t oracle_cap = 64;
  std::size_t jobs = 1;
  RandomGermSpec spec;
};

enum class ItemStatus { passed, skipped, mismatch, error };

/// One random germ. The cokernel and oracle channels run independently; an
/// empty value means that channel hit its cap and was skipped.
struct RandomItem {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::string germ_json;
  ItemStatus status = ItemStatus::passed;
  std::size_t r = 0;
  std::size_t delta = 0;
  std::int64_t mu = 0;
  std::optional<std::size_t> cokernel_delta;
  std::optional<std::size_t> oracle_mu;
  std::string detail;
};

struct RandomCheckSummary {
  std::vector<RandomItem> items;
  std::size_t passed = 0;
  std::size_t skipped = 0;
  std::size_t mismatches = 0;
  std::size_t errors = 0;
  std::size_t cokernel_checked = 0;
  std::size_t oracle_checked = 0;
  double seconds = 0;
};

RandomItem check_random_item(std::size_t index, const RandomCheckOptions& options);
RandomCheckSummary random_check(const RandomCheckOptions& options);
int cmd_random_check(const RandomCheckOptions& options, std::ostream& out, std::ostream& err);

/// Entry point behind the plcurve executable.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace plcurve::cli

#endif  // PLCURVE_CLI_COMMANDS_HPP
