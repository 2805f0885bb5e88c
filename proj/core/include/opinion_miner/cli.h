#ifndef OPINION_MINER_CLI_H_
#define OPINION_MINER_CLI_H_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace opinion_miner {

// Exit statuses of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;        // usage, config or data validation
inline constexpr int kExitMissingInput = 2;  // a stage input file is absent

std::string_view version();

// Entry point of the `opinion_miner` tool. `args` excludes the program
// name. Progress goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);
int run_cli(int argc, const char *const *argv);

}  // namespace opinion_miner

#endif  // OPINION_MINER_CLI_H_
