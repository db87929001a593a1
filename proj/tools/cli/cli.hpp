#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace hurwitz::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kBudgetRefused = 2,
    kUsage = 64,
};

struct RunConfig {
    std::uint64_t budget = 100'000'000;
    int g_max = 2;
    int n_max = 3;
    int m_max = 4;
    unsigned threads = 1;
    std::string output = "text";  // text | json
};

/// key=value lines; '#' starts a comment. Unknown keys and bad values throw std::invalid_argument.
std::map<std::string, std::string> parse_config_text(const std::string& text);

/// Applies settings in increasing precedence: config file, then HF_* environment, then flags.
/// Each layer maps config keys (budget, g_max, n_max, m_max, threads, output) to values.
RunConfig resolve_config(const std::map<std::string, std::string>& file,
                         const std::map<std::string, std::string>& env,
                         const std::map<std::string, std::string>& flags);

/// HF_BUDGET, HF_G_MAX, ... from the process environment.
std::map<std::string, std::string> environment_settings();

/// Runs one subcommand. args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hurwitz::cli
