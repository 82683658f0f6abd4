#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace taftcross {

/// Reported with exit status 1; the message names the offending flag.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One invocation. Roots of unity are exponents: q = zeta_m^q_exp,
/// qbar = zeta_n^qbar_exp, sigma = zeta_d^sigma_index with d = gcd(n, m),
/// alpha = zeta_n^alpha_exp or a rational string.
struct Command {
  std::string verb;  // build, verify, enumerate-pairs, classify, double, aut, iso
  std::optional<int> n, m;
  int q_exp = 1;
  std::optional<int> qbar_exp;
  int sigma_index = 0;
  std::optional<std::string> alpha;
  std::optional<int> alpha_exp;
  std::string family = "sigma";

  // target of iso
  std::string to_family = "sigma";
  int to_sigma_index = 0;
  std::optional<std::string> to_alpha;
  std::optional<int> to_alpha_exp;

  // replaces sigma in xX = sigma Xx by zeta_L^k (deliberately broken algebras)
  std::optional<int> corrupt_xx_exp;

  std::string out;
  unsigned jobs = 0;
  bool verbose = false;
  bool pretty = false;
};

extern const std::vector<std::string> kVerbs;

/// Throws UsageError on malformed flags. Returns nullopt when only help was requested.
std::optional<Command> parse_command(int argc, const char* const* argv, std::ostream& out);

/// Runs the command and writes the JSON document to cmd.out or to `out`.
/// 0 on success, 2 on a failed verification, 1 on a usage error.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

int cli_main(int argc, const char* const* argv);

}  // namespace taftcross
