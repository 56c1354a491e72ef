#pragma once

#include "gradorder/orders.hpp"
#include "gradorder/stg.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace gradorder {

enum class Format { text, json };

/// Process exit status of a command.
enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,
  kInputError = 2,
  kConsistencyFailure = 3,
};

/// Titled sections of plain lines and matrix tables, rendered either as text
/// or as a JSON document built alongside.
class Report {
 public:
  void section(const std::string& title);
  void line(const std::string& text);

  /// Rows are the first argument of the tabulated function.
  void table(const std::string& title, const std::vector<std::string>& row_labels,
             const std::vector<std::string>& col_labels, const ExponentMatrix& cells);

  nlohmann::json& data() { return data_; }
  const nlohmann::json& data() const { return data_; }

  std::string render(Format format) const;

 private:
  std::vector<std::string> text_;
  nlohmann::json data_ = nlohmann::json::object();
};

/// Order in which primes are listed: by user label when every prime has one,
/// otherwise the internal (norm, generator) order.
std::vector<int> display_order(const RelevantPrimes& primes);

/// Key used for a prime in structured output: its canonical generator, or
/// its name for synthetic instances.
std::string prime_key(const RelevantPrimes& primes, int p);

/// I_g as a product of prime powers, e.g. "(1+2i)^-1 (1+i)^-2"; "(1)" if trivial.
std::string render_ideal(const GradedOrder& T, Elem g);

/// { g-label: { prime: exponent } }, zero exponents omitted.
nlohmann::json order_to_json(const GradedOrder& T);

/// { "prime|g|h": value }
nlohmann::json table_to_json(const CocycleTable& t);

/// { "prime|g": value }
nlohmann::json function_to_json(const PrimeFunction& f);

struct CommandOptions {
  std::string method = "all";
  Format format = Format::text;
  std::string order = "maximal:0";
  std::string by;
  int depth = 2;
};

struct CommandResult {
  int exit_code = kOk;
  std::string output;
};

CommandResult cmd_validate(const CGRSpec& spec, const CommandOptions& opt);
CommandResult cmd_maternal(const CGRSpec& spec, const CommandOptions& opt);
CommandResult cmd_maximal(const CGRSpec& spec, const CommandOptions& opt);
CommandResult cmd_conjugate(const CGRSpec& spec, const CommandOptions& opt);
CommandResult cmd_orbit(const CGRSpec& spec, const CommandOptions& opt);
CommandResult cmd_stg_check(const CGRSpec& spec, const CommandOptions& opt);

/// Loads `path` and dispatches; parse and selector errors give kInputError with
/// a message on the output.
CommandResult run_command(const std::string& command, const std::string& path, const CommandOptions& opt);

/// Resolves "maternal:<i>", "maximal:<i>" or "A". Throws std::invalid_argument.
GradedOrder select_order(const KTable& k, const std::string& selector);

}  // namespace gradorder
