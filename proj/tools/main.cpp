#include "commands.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

using namespace rainbow::cli;

int main(int argc, char ** argv)
{
    CLI::App app{"Rainbow connection colorings: compute, construct, verify"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json_out = false;
    bool timing = false;
    std::string report_file;
    app.add_flag("--json", json_out, "Print the machine-readable report instead of text");
    app.add_option("--report", report_file, "Also write the machine-readable report to this file");
    app.add_flag("--timing", timing, "Include wall time in the report");

    std::function<RunReport()> run;

    MetricsArgs metrics_args;
    auto * metrics = app.add_subcommand("metrics", "Order, size, diameter, radius, center, bridges, eligibility");
    metrics->add_option("graph", metrics_args.graph_file, "Edge-list file")->required();
    metrics->callback([&] { run = [&] { return cmd_metrics(metrics_args); }; });

    Color5Args color5_args;
    auto * color5 = app.add_subcommand("color5", "Construct and verify a rainbow coloring with at most 5 colors");
    color5->add_option("graph", color5_args.graph_file, "Edge-list file")->required();
    color5->add_option("--out", color5_args.out_file, "Coloring output file");
    color5->add_option("--trace", color5_args.trace_file, "Construction trace output file (JSON)");
    color5->callback([&] { run = [&] { return cmd_color5(color5_args); }; });

    VerifyArgs verify_args;
    auto * verify = app.add_subcommand("verify", "Check that a coloring is rainbow connected");
    verify->add_option("graph", verify_args.graph_file, "Edge-list file")->required();
    verify->add_option("coloring", verify_args.coloring_file, "Coloring file")->required();
    verify->add_flag("--witnesses", verify_args.witnesses, "List a rainbow path for every pair");
    verify->callback([&] { run = [&] { return cmd_verify(verify_args); }; });

    ExactArgs exact_args;
    auto * exact = app.add_subcommand("exact", "Exact rainbow connection number by exhaustive search");
    exact->add_option("graph", exact_args.graph_file, "Edge-list file")->required();
    exact->add_option("--max-colors", exact_args.max_colors, "Largest color count to try")
        ->capture_default_str()
        ->check(CLI::Range(1, 16));
    exact->add_option("--budget", exact_args.budget, "Maximum colorings to test")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    exact->add_option("--out", exact_args.out_file, "Coloring output file");
    exact->callback([&] { run = [&] { return cmd_exact(exact_args); }; });

    FuzzArgs fuzz_args;
    auto * fuzz = app.add_subcommand("fuzz", "Run the 5-coloring construction on random eligible graphs");
    fuzz->add_option("--trials", fuzz_args.trials)->capture_default_str()->check(CLI::NonNegativeNumber);
    fuzz->add_option("--n-max", fuzz_args.n_max)->capture_default_str()->check(CLI::Range(4, 1000));
    fuzz->add_option("--seed", fuzz_args.seed)->capture_default_str();
    fuzz->add_option("--model", fuzz_args.model)
        ->capture_default_str()
        ->check(CLI::IsMember({"mixed", "uniform-rejection", "hub-augmented", "extremal-perturbed"}));
    fuzz->add_option("--out-dir", fuzz_args.out_dir, "Where failing graphs and traces are written")
        ->capture_default_str();
    fuzz->callback([&] { run = [&] { return cmd_fuzz(fuzz_args); }; });

    auto * gen = app.add_subcommand("gen", "Graph generators");
    gen->require_subcommand(1);

    GenExtremalArgs extremal_args;
    auto * extremal = gen->add_subcommand("extremal", "Hub joined by k disjoint 2-paths to a k-clique");
    extremal->add_option("--k", extremal_args.k)->capture_default_str()->check(CLI::Range(2, 100000));
    extremal->add_option("--out", extremal_args.out_file, "Edge-list output file");
    extremal->add_flag("--with-coloring", extremal_args.with_coloring,
                       "Also write the 5-color coloring to <out>.coloring");
    extremal->callback([&] { run = [&] { return cmd_gen_extremal(extremal_args); }; });

    GenRandomArgs random_args;
    auto * random = gen->add_subcommand("random", "Random connected bridgeless diameter-2 graph");
    random->add_option("--model", random_args.model)
        ->capture_default_str()
        ->check(CLI::IsMember({"uniform-rejection", "hub-augmented", "extremal-perturbed"}));
    random->add_option("--n", random_args.n)->capture_default_str()->check(CLI::Range(4, 100000));
    random->add_option("--seed", random_args.seed)->capture_default_str();
    random->add_option("--out", random_args.out_file, "Edge-list output file");
    random->callback([&] { run = [&] { return cmd_gen_random(random_args); }; });

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    auto start = std::chrono::steady_clock::now();
    RunReport report = run();
    if (timing)
        report.wall_time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (!report_file.empty()) {
        std::ofstream out(report_file, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write " << report_file << '\n';
            return kBadInput;
        }
        out << to_json(report);
    }
    if (json_out)
        std::cout << to_json(report);
    else if (report.outcome == "error")
        std::cerr << report.human;
    else {
        std::cout << report.human;
        if (report.wall_time_ms)
            std::cout << "wall time: " << *report.wall_time_ms << " ms\n";
    }
    return report.exit_code;
}
