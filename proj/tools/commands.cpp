#include "commands.hpp"

#include <rainbow/coloring.hpp>
#include <rainbow/constructive.hpp>
#include <rainbow/exact.hpp>
#include <rainbow/extremal.hpp>
#include <rainbow/generator.hpp>

#include <openssl/evp.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace rainbow::cli {

using json = nlohmann::ordered_json;

bool RunReport::operator==(const RunReport & other) const
{
    return command == other.command && input_digest == other.input_digest && outcome == other.outcome &&
           payload == other.payload && wall_time_ms == other.wall_time_ms && exit_code == other.exit_code;
}

std::string to_json(const RunReport & r)
{
    json j;
    j["command"] = r.command;
    j["input_digest"] = r.input_digest;
    j["outcome"] = r.outcome;
    j["exit_code"] = r.exit_code;
    j["payload"] = r.payload;
    if (r.wall_time_ms)
        j["wall_time_ms"] = *r.wall_time_ms;
    return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string & text)
{
    auto j = json::parse(text);
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.input_digest = j.at("input_digest").get<std::string>();
    r.outcome = j.at("outcome").get<std::string>();
    r.exit_code = j.at("exit_code").get<int>();
    r.payload = j.at("payload");
    if (j.contains("wall_time_ms"))
        r.wall_time_ms = j.at("wall_time_ms").get<double>();
    return r;
}

std::string sha256_hex(const std::string & bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr);
    static const char * hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

namespace {

std::string read_file(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw PreconditionError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string & path, const std::string & content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw PreconditionError("cannot write " + path);
    out << content;
}

RunReport error_report(RunReport r, int code, const std::string & message)
{
    r.outcome = "error";
    r.exit_code = code;
    r.payload["error"] = message;
    r.human = "error: " + message + "\n";
    return r;
}

/// Maps library exceptions onto exit codes.
template <typename Body>
RunReport guarded(RunReport r, Body && body)
{
    try {
        body(r);
        return r;
    }
    catch (const ConstructionError & e) {
        return error_report(std::move(r), kVerificationFailure, e.what());
    }
    catch (const ParseError & e) {
        return error_report(std::move(r), kBadInput, e.what());
    }
    catch (const PreconditionError & e) {
        return error_report(std::move(r), kBadInput, e.what());
    }
    catch (const std::exception & e) {
        return error_report(std::move(r), kInternalFault, e.what());
    }
}

json pair_json(const VertexPair & p)
{
    return json::array({p.first, p.second});
}

} // namespace

RunReport cmd_metrics(const MetricsArgs & args)
{
    RunReport r;
    r.command = "metrics " + args.graph_file;
    return guarded(std::move(r), [&](RunReport & r) {
        auto text = read_file(args.graph_file);
        r.input_digest = sha256_hex(text);
        auto g = parse_edge_list(text);
        auto elig = check_eligibility(g);

        r.payload["n"] = g.order();
        r.payload["m"] = g.size();
        r.payload["connected"] = elig.connected;
        r.payload["bridge_count"] = elig.bridge_count;
        std::ostringstream human;
        human << "n: " << g.order() << "\nm: " << g.size() << '\n';
        if (elig.connected) {
            auto m = metrics(g);
            r.payload["diameter"] = m.diameter;
            r.payload["radius"] = m.radius;
            r.payload["center_vertices"] = m.center_vertices;
            human << "diameter: " << m.diameter << "\nradius: " << m.radius << "\ncenter:";
            for (auto v : m.center_vertices)
                human << ' ' << v;
            human << '\n';
        }
        else
            human << "connected: false\n";
        r.payload["eligible"] = elig.eligible();
        r.payload["reason"] = elig.reason();
        human << "bridges: " << elig.bridge_count << '\n';
        if (elig.eligible())
            human << "eligible: true, diam=2\n";
        else
            human << "eligible: false (" << elig.reason() << ")\n";
        r.outcome = "ok";
        r.human = human.str();
    });
}

RunReport cmd_color5(const Color5Args & args)
{
    RunReport r;
    r.command = "color5 " + args.graph_file;
    if (!args.out_file.empty())
        r.command += " --out " + args.out_file;
    if (!args.trace_file.empty())
        r.command += " --trace " + args.trace_file;

    return guarded(std::move(r), [&](RunReport & r) {
        auto text = read_file(args.graph_file);
        r.input_digest = sha256_hex(text);
        auto g = parse_edge_list(text);

        try {
            auto result = five_color(g);
            auto coloring_text = write_coloring(g, result.coloring);
            if (!args.out_file.empty())
                write_file(args.out_file, coloring_text);
            if (!args.trace_file.empty())
                write_file(args.trace_file, trace_to_json(g, result.trace));

            r.outcome = "ok";
            r.payload["center"] = result.trace.center;
            r.payload["terminal_case"] = to_string(*result.trace.terminal);
            r.payload["colors_used"] = result.coloring.colors_used();
            r.payload["num_colors"] = result.coloring.num_colors();
            r.payload["verified"] = true;
            r.payload["coloring_digest"] = sha256_hex(coloring_text);
            if (!args.out_file.empty())
                r.payload["coloring_path"] = args.out_file;
            if (!args.trace_file.empty())
                r.payload["trace_path"] = args.trace_file;
            r.human = "verified rainbow coloring with " + std::to_string(result.coloring.colors_used()) +
                      " colors (case " + to_string(*result.trace.terminal) + ")\n";
            if (args.out_file.empty())
                r.human += coloring_text;
        }
        catch (const ConstructionError & e) {
            // A failed construction is a proof-gap report; always keep the trace.
            auto trace_path = args.trace_file.empty() ? args.graph_file + ".trace.json" : args.trace_file;
            write_file(trace_path, trace_to_json(g, e.trace()));
            r.outcome = "violation";
            r.exit_code = kVerificationFailure;
            r.payload["error"] = e.what();
            r.payload["trace_path"] = trace_path;
            if (e.violation())
                r.payload["violation"] = pair_json(*e.violation());
            r.human = std::string("construction failed: ") + e.what() + "\ntrace: " + trace_path + "\n";
        }
    });
}

RunReport cmd_verify(const VerifyArgs & args)
{
    RunReport r;
    r.command = "verify " + args.graph_file + " " + args.coloring_file + (args.witnesses ? " --witnesses" : "");
    return guarded(std::move(r), [&](RunReport & r) {
        auto gtext = read_file(args.graph_file);
        auto ctext = read_file(args.coloring_file);
        r.input_digest = sha256_hex(gtext + ctext);
        auto g = parse_edge_list(gtext);
        auto c = read_coloring(g, ctext);
        auto cert = is_rainbow_connected(g, c);

        r.payload["connected"] = cert.connected;
        r.payload["num_colors"] = c.num_colors();
        r.payload["colors_used"] = c.colors_used();
        std::ostringstream human;
        human << "connected: " << (cert.connected ? "true" : "false") << '\n';
        if (cert.violation) {
            r.payload["violation"] = pair_json(*cert.violation);
            human << "no rainbow path between " << cert.violation->first << " and " << cert.violation->second
                  << '\n';
        }
        if (args.witnesses) {
            json paths = json::array();
            for (const auto & [pair, path] : cert.witnesses) {
                paths.push_back({{"pair", pair_json(pair)}, {"path", path}});
                human << pair.first << " " << pair.second << ":";
                for (auto v : path)
                    human << ' ' << v;
                human << '\n';
            }
            r.payload["witnesses"] = paths;
        }
        r.outcome = cert.connected ? "ok" : "violation";
        r.exit_code = cert.connected ? kOk : kVerificationFailure;
        r.human = human.str();
    });
}

RunReport cmd_exact(const ExactArgs & args)
{
    RunReport r;
    r.command = "exact " + args.graph_file + " --max-colors " + std::to_string(args.max_colors) + " --budget " +
                std::to_string(args.budget);
    if (!args.out_file.empty())
        r.command += " --out " + args.out_file;
    return guarded(std::move(r), [&](RunReport & r) {
        auto text = read_file(args.graph_file);
        r.input_digest = sha256_hex(text);
        auto g = parse_edge_list(text);
        auto result = exact_rc(g, args.max_colors, args.budget);
        auto coloring_text = write_coloring(g, result.optimal_coloring);
        if (!args.out_file.empty())
            write_file(args.out_file, coloring_text);

        r.outcome = "ok";
        r.payload["rc"] = result.rc_value;
        r.payload["exhausted"] = result.exhausted;
        r.payload["lower_bound"] = rc_lower_bound(g);
        r.payload["colorings_tested"] = result.colorings_tested;
        r.payload["coloring_digest"] = sha256_hex(coloring_text);
        r.human = (result.exhausted ? "rc=" : "rc<=") + std::to_string(result.rc_value) + " (" +
                  std::to_string(result.colorings_tested) + " colorings tested" +
                  (result.exhausted ? "" : ", search not exhausted") + ")\n";
        if (args.out_file.empty())
            r.human += coloring_text;
    });
}

RunReport cmd_fuzz(const FuzzArgs & args)
{
    RunReport r;
    r.command = "fuzz --trials " + std::to_string(args.trials) + " --n-max " + std::to_string(args.n_max) +
                " --seed " + std::to_string(args.seed) + " --model " + args.model;
    return guarded(std::move(r), [&](RunReport & r) {
        if (args.n_max < 4)
            throw PreconditionError("--n-max must be at least 4");
        if (args.trials < 0)
            throw PreconditionError("--trials must be non-negative");
        const bool mixed = args.model == "mixed";
        const Model fixed = mixed ? Model::UniformRejection : parse_model(args.model);
        const Model rotation[] = {Model::UniformRejection, Model::HubAugmented, Model::ExtremalPerturbed};

        SplitMix64 master(args.seed);
        int passed = 0, failed = 0, exhausted = 0, max_used = 0;
        std::map<std::string, int> cases, per_model;
        json failures = json::array();

        for (int i = 0; i < args.trials; ++i) {
            GenModel gm;
            gm.model = mixed ? rotation[i % 3] : fixed;
            gm.n = master.between(4, args.n_max);
            gm.seed = master.next();

            Graph g;
            try {
                g = random_diam2_bridgeless(gm);
            }
            catch (const GeneratorExhausted &) {
                ++exhausted;
                continue;
            }
            ++per_model[to_string(gm.model)];

            auto stem = args.out_dir + "/fuzz-" + to_string(gm.model) + "-n" + std::to_string(gm.n) + "-seed" +
                        std::to_string(gm.seed);
            json failure = {{"trial", i}, {"model", to_string(gm.model)}, {"n", gm.n}, {"seed", gm.seed}};
            try {
                auto result = five_color(g);
                int used = result.coloring.colors_used();
                if (result.coloring.num_colors() > 5) {
                    failure["reason"] = "more than 5 colors";
                    throw InternalFault("more than 5 colors");
                }
                max_used = std::max(max_used, used);
                ++cases[to_string(*result.trace.terminal)];
                ++passed;
            }
            catch (const ConstructionError & e) {
                ++failed;
                failure["reason"] = e.what();
                std::filesystem::create_directories(args.out_dir);
                write_file(stem + ".edges", write_edge_list(g));
                write_file(stem + ".trace.json", trace_to_json(g, e.trace()));
                failures.push_back(failure);
            }
        }

        r.payload["trials"] = args.trials;
        r.payload["passed"] = passed;
        r.payload["failed"] = failed;
        r.payload["generator_exhausted"] = exhausted;
        r.payload["max_colors_used"] = max_used;
        r.payload["terminal_cases"] = cases;
        r.payload["graphs_per_model"] = per_model;
        r.payload["failures"] = failures;
        r.outcome = failed == 0 ? "ok" : "violation";
        r.exit_code = failed == 0 ? kOk : kVerificationFailure;

        std::ostringstream human;
        human << passed << "/" << (passed + failed) << " passed";
        if (exhausted)
            human << ", " << exhausted << " generator exhaustions";
        human << ", max colors used " << max_used << '\n';
        for (const auto & f : failures)
            human << "FAIL " << f["model"].get<std::string>() << " n=" << f["n"].get<int>()
                  << " seed=" << f["seed"].get<std::uint64_t>() << ": " << f["reason"].get<std::string>() << '\n';
        r.human = human.str();
    });
}

RunReport cmd_gen_extremal(const GenExtremalArgs & args)
{
    RunReport r;
    r.command = "gen extremal --k " + std::to_string(args.k) + (args.out_file.empty() ? "" : " --out " + args.out_file) +
                (args.with_coloring ? " --with-coloring" : "");
    return guarded(std::move(r), [&](RunReport & r) {
        auto [g, spec] = gen_extremal(args.k);
        auto edges = write_edge_list(g);
        r.outcome = "ok";
        r.payload["k"] = spec.k;
        r.payload["n"] = g.order();
        r.payload["m"] = g.size();
        r.payload["graph_digest"] = sha256_hex(edges);
        if (args.with_coloring && args.out_file.empty())
            throw PreconditionError("--with-coloring needs --out");
        if (!args.out_file.empty()) {
            write_file(args.out_file, edges);
            r.payload["graph_path"] = args.out_file;
            r.human = "wrote " + args.out_file + "\n";
        }
        else
            r.human = edges;
        if (args.with_coloring) {
            auto path = args.out_file + ".coloring";
            write_file(path, write_coloring(g, canonical_coloring(args.k)));
            r.payload["coloring_path"] = path;
            r.human += "wrote " + path + "\n";
        }
    });
}

RunReport cmd_gen_random(const GenRandomArgs & args)
{
    RunReport r;
    r.command = "gen random --model " + args.model + " --n " + std::to_string(args.n) + " --seed " +
                std::to_string(args.seed) + (args.out_file.empty() ? "" : " --out " + args.out_file);
    return guarded(std::move(r), [&](RunReport & r) {
        GenModel gm;
        gm.model = parse_model(args.model);
        gm.n = args.n;
        gm.seed = args.seed;
        Graph g;
        try {
            g = random_diam2_bridgeless(gm);
        }
        catch (const GeneratorExhausted & e) {
            throw PreconditionError(e.what());
        }
        auto edges = write_edge_list(g);
        r.outcome = "ok";
        r.payload["n"] = g.order();
        r.payload["m"] = g.size();
        r.payload["graph_digest"] = sha256_hex(edges);
        if (!args.out_file.empty()) {
            write_file(args.out_file, edges);
            r.payload["graph_path"] = args.out_file;
            r.human = "wrote " + args.out_file + "\n";
        }
        else
            r.human = edges;
    });
}

} // namespace rainbow::cli
