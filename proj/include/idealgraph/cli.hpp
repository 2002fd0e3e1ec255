#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "idealgraph/sweep.hpp"

namespace idealgraph::cli {

// Exit codes: 0 success, 1 usage/parse/cap error, 2 classification
// disagreement, 3 non-Hamiltonian spec.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDisagreement = 2;
inline constexpr int kExitNotHamiltonian = 3;

/// Oracle cap: explicit flag, else the IDEALGRAPH_ORACLE_CAP environment
/// variable, else the built-in default.
int resolve_oracle_cap(std::optional<int> flag_value);

int cmd_classify(const std::string& spec_text, const std::string& format, int oracle_cap,
                 std::ostream& out, std::ostream& err);
int cmd_graph(const std::string& spec_text, bool as_json, std::ostream& out, std::ostream& err);
int cmd_hamiltonian(const std::string& spec_text, int oracle_cap, std::ostream& out,
                    std::ostream& err);
int cmd_pancyclic(const std::string& spec_text, int oracle_cap, std::ostream& out,
                  std::ostream& err);
int cmd_sweep(const SweepConfig& config, const std::string& format, bool with_timestamp,
              std::ostream& out, std::ostream& err);

}  // namespace idealgraph::cli
