#ifndef PLCURVE_ERRORS_HPP
#define PLCURVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plcurve {

/// Failure classes shared by every module. The CLI maps them onto exit codes:
/// invalid_input, undetermined and unsupported exit 1, inconsistent exits 2.
enum class ErrorKind {
  invalid_input,  // malformed data or a violated precondition
  undetermined,   // a computation did not stabilize below its precision cap
  unsupported,    // input outside what a route can handle (e.g. series into the oracle)
  inconsistent,   // two independent routes disagree, or a table breaks a hypothesis
};

const char* to_string(ErrorKind kind);

class AnalysisError : public std::runtime_error {
 public:
  AnalysisError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace plcurve

#endif  // PLCURVE_ERRORS_HPP
