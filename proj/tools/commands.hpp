#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace rainbow::cli {

enum ExitCode : int
{
    kOk = 0,
    kInternalFault = 1,
    kBadInput = 2,
    kVerificationFailure = 3,
};

/// Result of one CLI command. `to_json` is the machine form; `human` is what
/// gets printed without --json.
struct RunReport
{
    std::string command;
    std::string input_digest; ///< sha256 of the input files, hex; empty if none
    std::string outcome;      ///< ok | violation | error
    nlohmann::ordered_json payload = nlohmann::ordered_json::object();
    std::optional<double> wall_time_ms; ///< only with --timing, keeps reports reproducible
    int exit_code = kOk;
    std::string human;

    bool operator==(const RunReport & other) const;
};

std::string to_json(const RunReport & r);
RunReport report_from_json(const std::string & text);

std::string sha256_hex(const std::string & bytes);

struct MetricsArgs
{
    std::string graph_file;
};

struct Color5Args
{
    std::string graph_file;
    std::string out_file;
    std::string trace_file;
};

struct VerifyArgs
{
    std::string graph_file;
    std::string coloring_file;
    bool witnesses = false;
};

struct ExactArgs
{
    std::string graph_file;
    int max_colors = 6;
    std::int64_t budget = 50'000'000;
    std::string out_file;
};

struct FuzzArgs
{
    int trials = 100;
    int n_max = 30;
    std::uint64_t seed = 42;
    std::string model = "mixed";
    std::string out_dir = ".";
};

struct GenExtremalArgs
{
    int k = 17;
    std::string out_file;
    bool with_coloring = false;
};

struct GenRandomArgs
{
    std::string model = "uniform-rejection";
    int n = 10;
    std::uint64_t seed = 0;
    std::string out_file;
};

RunReport cmd_metrics(const MetricsArgs & args);
RunReport cmd_color5(const Color5Args & args);
RunReport cmd_verify(const VerifyArgs & args);
RunReport cmd_exact(const ExactArgs & args);
RunReport cmd_fuzz(const FuzzArgs & args);
RunReport cmd_gen_extremal(const GenExtremalArgs & args);
RunReport cmd_gen_random(const GenRandomArgs & args);

} // namespace rainbow::cli
