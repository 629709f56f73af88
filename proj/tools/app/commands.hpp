#pragma once

#include "config.hpp"

#include <tricoll/spectrum.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace tricoll::app {

enum ExitCode : int {
    exit_ok = 0,
    exit_config = 2,
    exit_solver = 3,
    exit_missing = 4,
};

struct Paths {
    std::filesystem::path out = "out";
    std::filesystem::path cache = ".tricoll-cache";
};

// Streams for the human summary (stdout) and machine-readable records (stderr).
struct Streams {
    std::ostream& out;
    std::ostream& err;
};

// Eigenbasis plus classification, from cache or freshly solved.
struct SpectrumRun {
    EigenSolution solution;
    Classification classification;
    bool cache_hit = false;
};

SpectrumRun obtain_spectrum(const RunConfig& config, const Paths& paths, Streams io);

// Each command validates the config, writes its files plus an effective
// config and a JSON manifest into paths.out, and returns an ExitCode.
// Failures are reported as one JSON line on the error stream.
int cmd_spectrum(const RunConfig& config, const Paths& paths, Streams io);
int cmd_transitivity(const RunConfig& config, const Paths& paths, Streams io);
int cmd_control(const RunConfig& config, const Paths& paths, Streams io);
int cmd_oracle(const Paths& paths, Streams io);

// {"error": kind, "message": ..., "exit_code": ...} on one line.
void write_error_record(std::ostream& err, const std::string& kind, const std::string& message,
                        int code);

}  // namespace tricoll::app
