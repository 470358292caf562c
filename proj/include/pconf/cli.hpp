#pragma once

// Command implementations behind the `pconf` executable. Each command renders
// its whole output to a string so runs are reproducible byte for byte.

#include "pconf/exact.hpp"

#include <map>
#include <string>
#include <vector>

namespace pconf::cli {

enum class Format { Json, Csv };

struct RunConfig {
    std::string command;
    std::string m = "1/4";  // "p/q" or, where exactness is not needed, "a+bi"
    std::string lambda;     // fredholm: overrides lambda(m) when set
    int nMax = 8;
    std::string zGrid = "0.1";  // a value or "start:stop:count"
    std::string rGrid = "0:4:9";
    std::vector<int> js{4, 8, 16, 32};
    int quadOrder = 64;
    int seriesOrder = 48;
    int draws = 100;
    unsigned long long seed = 1;
    Format format = Format::Json;
    std::string outPath;  // empty: stdout
    std::vector<std::string> only;
    std::map<std::string, double> tolerances;
};

struct RunResult {
    int exitCode = 0;
    std::string output;  // file contents
    std::string report;  // human-readable lines for the terminal (verify)
};

// Exit codes: 0 ok, 1 usage, 2 identity falsified, 3 numerical budget exceeded.
inline constexpr int kExitOk = 0, kExitUsage = 1, kExitIdentity = 2, kExitBudget = 3;

// "0.1", "2i", "-1.5+0.25i", "i", "1/4" -> complex. Throws std::invalid_argument.
// Exact m values go through pconf::parse_rational.
cplx parse_complex(const std::string& s);
// "start:stop:count" (endpoints may be complex, count >= 1) or a single value.
std::vector<cplx> parse_grid(const std::string& s);
// "a=1e-8" -> {a, 1e-8}
std::pair<std::string, double> parse_tolerance(const std::string& s);

// Worker threads from PCONF_THREADS (default 1).
int thread_count();

RunResult cmd_umemura(const RunConfig& cfg);
RunResult cmd_confluence(const RunConfig& cfg);
RunResult cmd_fredholm(const RunConfig& cfg);
RunResult cmd_monodromy(const RunConfig& cfg);
RunResult cmd_verify(const RunConfig& cfg);

// Dispatches on cfg.command and maps pconf errors to exit codes.
RunResult run(const RunConfig& cfg);

}  // namespace pconf::cli
