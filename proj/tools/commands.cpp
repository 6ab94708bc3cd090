#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ggasp/generators.hpp"
#include "ggasp/oracle.hpp"
#include "mini_toml.hpp"

namespace ggasp::cli {

using json = nlohmann::ordered_json;

namespace {

// Bad input file or malformed parameters: exit code 3.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(what + ": " + e.what());
    }
}

json guards_json(const Guards& g) {
    return {{"max_component", g.max_component},   {"max_p_components", g.max_p_components},
            {"max_p_tree", g.max_p_tree},         {"max_p_clique", g.max_p_clique},
            {"subset_budget", g.subset_budget},   {"oracle_budget", g.oracle_budget}};
}

}  // namespace

SolveOutcome solve(const Instance& inst, const SolveOptions& opt) {
    SolveOutcome out;
    const Algorithm used =
        opt.algorithm == Algorithm::Auto ? choose_algorithm(inst, opt.concept_, opt.guards) : opt.algorithm;
    if (auto r = why_not(inst, opt.concept_, used, opt.guards)) {
        out.error = "refused: " + algorithm_name(used) + ": " + *r;
        return out;
    }
    std::optional<Assignment> pi;
    try {
        pi = run_algorithm(inst, opt.concept_, used, opt.guards);
    } catch (const BudgetExceeded& e) {
        out.error = "refused: " + algorithm_name(used) + " overflowed (" + e.what() + ")";
        if (opt.algorithm == Algorithm::Auto)
            out.error += "; no specialized algorithm applied: " + refusal_reasons(inst, opt.concept_, opt.guards);
        return out;
    } catch (const PreconditionError& e) {
        out.error = std::string("refused: ") + e.what();
        return out;
    }

    json report;
    report["concept"] = concept_name(opt.concept_);
    report["requested_algorithm"] = algorithm_name(opt.algorithm);
    report["algorithm"] = algorithm_name(used);
    report["exists"] = pi.has_value();
    report["assignment"] = nullptr;
    report["certificate"] = nullptr;
    bool verified = true;
    if (pi) {
        report["assignment"] = json::parse(save_assignment(inst, *pi))["assignment"];
        const Certificate cert = certify(inst, *pi, opt.concept_);
        report["certificate"] = json::parse(certificate_json(inst, cert));
        verified = cert.stable;
    }
    report["fingerprint"] = fingerprint(inst);
    report["seed"] = opt.seed;
    report["guards"] = guards_json(opt.guards);

    bool agree = true;
    if (opt.cross_check) {
        json rows = json::array();
        for (Algorithm a : applicable_algorithms(inst, opt.concept_, opt.guards)) {
            json row;
            row["algorithm"] = algorithm_name(a);
            try {
                auto other = run_algorithm(inst, opt.concept_, a, opt.guards);
                row["exists"] = other.has_value();
                row["verified"] = !other || is_stable(inst, *other, opt.concept_);
                agree = agree && other.has_value() == pi.has_value() && row["verified"].get<bool>();
            } catch (const BudgetExceeded&) {
                row["exists"] = "overflow";
            }
            rows.push_back(row);
        }
        report["cross_check"] = rows;
        report["cross_check_agree"] = agree;
    }

    out.report = report.dump(2) + "\n";
    if (!verified) {
        out.error = "internal error: " + algorithm_name(used) + " returned an assignment that fails verification";
        out.exit_code = kRefused;
    } else if (!agree) {
        out.error = "internal error: cross-check disagreement";
        out.exit_code = kRefused;
    } else {
        out.exit_code = pi ? kFound : kNone;
    }
    return out;
}

namespace {

// ---------------------------------------------------------------- gen

template <class T>
T field(const json& j, const char* name) {
    if (!j.contains(name)) throw InputError(std::string("params: missing '") + name + "'");
    try {
        return j.at(name).get<T>();
    } catch (const json::exception&) {
        throw InputError(std::string("params: bad value for '") + name + "'");
    }
}

template <class T>
T field_or(const json& j, const char* name, T fallback) {
    return j.contains(name) ? field<T>(j, name) : fallback;
}

std::vector<std::pair<int, int>> edge_list(const json& j) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : field<std::vector<std::vector<int>>>(j, "edges")) {
        if (e.size() != 2) throw InputError("params: every edge needs two endpoints");
        edges.emplace_back(e[0], e[1]);
    }
    return edges;
}

std::vector<int> int_list(const json& j, const char* name) { return field<std::vector<int>>(j, name); }

std::string variant(const json& j, const std::vector<std::string>& allowed) {
    const auto v = field_or<std::string>(j, "variant", allowed.front());
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) throw InputError("params: unknown variant '" + v + "'");
    return v;
}

struct GenResult {
    Instance instance;
    std::optional<Assignment> witness;
};

GenResult generate(const std::string& family, const json& params, const std::optional<json>& solution,
                   std::uint64_t seed) {
    auto sol = [&](const char* name) {
        return solution ? std::optional<std::vector<int>>(int_list(*solution, name)) : std::nullopt;
    };
    if (family == "stalker" || family == "empty_core" || family == "empty_is") {
        if (solution) throw InputError("canonical instances take no source solution");
        return {canonical(family).instance, std::nullopt};
    }
    if (family == "rainbow") {
        EdgeColoredPath src{field<int>(params, "colors"), int_list(params, "edge_color"), field<int>(params, "k")};
        auto g = from_rainbow_matching(src, variant(params, {"ns", "cr-is"}) == "ns" ? RainbowVariant::NS
                                                                                       : RainbowVariant::CR_IS);
        auto m = sol("matching");
        return {g.instance, m ? std::optional(rainbow_witness(g, src, *m)) : std::nullopt};
    }
    if (family == "mmm") {
        BipartiteMMM src{field<int>(params, "left"), field<int>(params, "right"), edge_list(params),
                         field<int>(params, "k")};
        auto g = from_mmm(src, variant(params, {"ns", "is"}) == "ns" ? MmmVariant::NS : MmmVariant::IS);
        auto m = sol("matching");
        return {g.instance, m ? std::optional(mmm_witness(g, src, *m)) : std::nullopt};
    }
    if (family == "b2sat") {
        B2Formula src;
        src.variables = field<int>(params, "variables");
        for (const auto& c : field<std::vector<std::vector<int>>>(params, "clauses")) {
            if (c.size() != 3) throw InputError("params: every clause needs three literals");
            src.clauses.push_back({c[0], c[1], c[2]});
        }
        auto g = from_b2sat(src, variant(params, {"ns", "cr-is"}) == "ns" ? B2Variant::NS : B2Variant::CR_IS);
        if (!solution) return {g.instance, std::nullopt};
        auto truth = field<std::vector<bool>>(*solution, "truth");
        return {g.instance, b2sat_witness(g, src, truth)};
    }
    if (family == "x3c-star" || family == "x3c-clique") {
        X3CInput src;
        src.k = field<int>(params, "k");
        for (const auto& s : field<std::vector<std::vector<int>>>(params, "sets")) {
            if (s.size() != 3) throw InputError("params: every set needs three elements");
            src.sets.push_back({s[0], s[1], s[2]});
        }
        const bool star = family == "x3c-star";
        auto g = star ? from_x3c_star(src) : from_x3c_clique(src);
        auto cover = sol("cover");
        if (!cover) return {g.instance, std::nullopt};
        return {g.instance, star ? x3c_star_witness(g, src, *cover) : x3c_clique_witness(g, src, *cover)};
    }
    if (family == "regular-clique") {
        RegularCliqueInput src{field<int>(params, "vertices"), edge_list(params), field<int>(params, "k")};
        auto g = from_regular_clique(src, variant(params, {"ns", "is"}) == "ns" ? RegularVariant::NS
                                                                                : RegularVariant::IS);
        auto c = sol("clique");
        return {g.instance, c ? std::optional(regular_clique_witness(g, src, *c)) : std::nullopt};
    }
    if (family == "multicolored") {
        MulticoloredInput src{field<int>(params, "h"), field<int>(params, "q"), edge_list(params)};
        auto g = from_multicolored(src, variant(params, {"core", "nsis"}) == "core" ? MulticoloredVariant::CORE_MIS
                                                                                   : MulticoloredVariant::NSIS_MC);
        auto c = sol("chosen");
        return {g.instance, c ? std::optional(multicolored_witness(g, src, *c)) : std::nullopt};
    }
    if (family == "random") {
        if (solution) throw InputError("random instances take no source solution");
        const auto kind_name = field_or<std::string>(params, "graph", "path");
        auto kind = parse_graph_kind(kind_name);
        if (!kind) throw InputError("params: unknown graph kind '" + kind_name + "'");
        const int n = field_or<int>(params, "n", 5), p = field_or<int>(params, "p", 2);
        const double density = field_or<double>(params, "density", 0.5);
        const std::uint64_t s = field_or<std::uint64_t>(params, "seed", seed);
        if (field_or<bool>(params, "copyable", false)) return {random_copyable_instance(s, n, p, *kind, density), std::nullopt};
        return {random_instance(s, n, p, *kind, density), std::nullopt};
    }
    throw InputError("unknown family '" + family + "'");
}

// ---------------------------------------------------------------- bench

struct BenchJob {
    std::string family, graph;
    int n = 0, p = 0;
    double density = 0;
    std::uint64_t seed = 0;
    std::string path;
    Concept concept_ = Concept::NashStable;
    Algorithm algorithm = Algorithm::Auto;
};

struct BenchRow {
    std::string status, algorithm, exists, stable;
    int n = 0, p = 0;
    double wall_ms = 0;
};

Instance bench_instance(const BenchJob& job) {
    if (job.family == "random") return random_instance(job.seed, job.n, job.p, *parse_graph_kind(job.graph), job.density);
    if (job.family == "random-copyable")
        return random_copyable_instance(job.seed, job.n, job.p, *parse_graph_kind(job.graph), job.density);
    if (job.family == "file") return load_instance(read_file(job.path));
    return canonical(job.family).instance;
}

BenchRow run_job(const BenchJob& job, const Guards& guards) {
    BenchRow row;
    const auto start = std::chrono::steady_clock::now();
    try {
        const Instance inst = bench_instance(job);
        row.n = inst.num_players();
        row.p = inst.num_activities();
        const Algorithm used =
            job.algorithm == Algorithm::Auto ? choose_algorithm(inst, job.concept_, guards) : job.algorithm;
        row.algorithm = algorithm_name(used);
        if (why_not(inst, job.concept_, used, guards)) {
            row.status = "refused";
        } else {
            auto pi = run_algorithm(inst, job.concept_, used, guards);
            row.status = "ok";
            row.exists = pi ? "1" : "0";
            if (pi) row.stable = is_stable(inst, *pi, job.concept_) ? "1" : "0";
        }
    } catch (const BudgetExceeded&) {
        row.status = "overflow";
    } catch (const std::exception&) {
        row.status = "error";
    }
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return row;
}

std::vector<BenchJob> bench_jobs(const json& config) {
    if (!config.contains("sweep") || !config["sweep"].is_array())
        throw InputError("bench config needs at least one [[sweep]] table");
    std::vector<BenchJob> jobs;
    for (const auto& sw : config["sweep"]) {
        const auto family = field<std::string>(sw, "family");
        if (family != "random" && family != "random-copyable" && family != "file" && family != "stalker" &&
            family != "empty_core" && family != "empty_is")
            throw InputError("bench: unknown family '" + family + "'");
        const auto graph = field_or<std::string>(sw, "graph", "path");
        if (!parse_graph_kind(graph)) throw InputError("bench: unknown graph kind '" + graph + "'");
        const auto sizes = field_or<std::vector<int>>(sw, "sizes", {5});
        const int p = field_or<int>(sw, "activities", 2);
        const double density = field_or<double>(sw, "density", 0.5);
        const auto seed = field_or<std::uint64_t>(sw, "seed", 1);
        const int reps = field_or<int>(sw, "repetitions", 1);
        std::vector<Concept> concepts;
        for (const auto& c : field_or<std::vector<std::string>>(sw, "concepts", {"ns"})) {
            auto parsed = parse_concept(c);
            if (!parsed) throw InputError("bench: unknown concept '" + c + "'");
            concepts.push_back(*parsed);
        }
        std::vector<Algorithm> algorithms;
        for (const auto& a : field_or<std::vector<std::string>>(sw, "algorithms", {"auto"})) {
            auto parsed = parse_algorithm(a);
            if (!parsed) throw InputError("bench: unknown algorithm '" + a + "'");
            algorithms.push_back(*parsed);
        }
        const bool sized = family == "random" || family == "random-copyable";
        for (int n : sized ? sizes : std::vector<int>{0})
            for (int r = 0; r < (sized ? reps : 1); ++r)
                for (Concept c : concepts)
                    for (Algorithm a : algorithms) {
                        BenchJob job;
                        job.family = family;
                        job.graph = sized ? graph : "";
                        job.n = n;
                        job.p = p;
                        job.density = density;
                        job.seed = seed + r;
                        job.path = family == "file" ? field<std::string>(sw, "path") : "";
                        job.concept_ = c;
                        job.algorithm = a;
                        jobs.push_back(job);
                    }
    }
    return jobs;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

int bench(const std::string& config_path, const std::string& out_path, int jobs_flag, const Guards& guards,
          std::ostream& out) {
    json config;
    try {
        config = minitoml::parse(read_file(config_path));
    } catch (const std::runtime_error& e) {
        throw InputError(e.what());
    }
    const auto jobs = bench_jobs(config);
    int workers = jobs_flag > 0 ? jobs_flag : field_or<int>(config, "jobs", 0);
    if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::vector<BenchRow> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t x = next++; x < jobs.size(); x = next++) rows[x] = run_job(jobs[x], guards);
        });
    for (auto& t : pool) t.join();

    std::ostringstream csv;
    csv << "family,graph,n,p,density,seed,concept,requested,algorithm,status,exists,stable,wall_ms\n";
    for (std::size_t x = 0; x < jobs.size(); ++x) {
        const auto& j = jobs[x];
        const auto& r = rows[x];
        char wall[32];
        std::snprintf(wall, sizeof wall, "%.3f", r.wall_ms);
        char dens[32];
        std::snprintf(dens, sizeof dens, "%g", j.density);
        csv << csv_field(j.family == "file" ? j.path : j.family) << ',' << j.graph << ',' << r.n << ',' << r.p << ','
            << dens << ',' << j.seed << ',' << concept_name(j.concept_) << ',' << algorithm_name(j.algorithm) << ','
            << r.algorithm << ',' << r.status << ',' << r.exists << ',' << r.stable << ',' << wall << '\n';
    }
    if (out_path.empty())
        out << csv.str();
    else
        write_file(out_path, csv.str());
    return kFound;
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stable outcomes of group activity selection on social networks"};
    app.require_subcommand(1);

    std::string concept_arg = "ns", algorithm_arg = "auto", input, assignment_path;
    std::optional<int> max_p, max_component;
    std::optional<std::int64_t> budget;
    bool cross_check = false;
    std::uint64_t seed = 0;

    auto add_guards = [&](CLI::App* sub) {
        sub->add_option("--max-p", max_p, "Largest activity count for the fixed-parameter solvers");
        sub->add_option("--max-component", max_component, "Largest component size for the component solver");
        sub->add_option("--budget", budget, "Search budget for brute force and coalition enumeration");
    };

    auto* solve_cmd = app.add_subcommand("solve", "Find a stable assignment or prove none exists");
    solve_cmd->add_option("--concept", concept_arg, "ns | is | core");
    solve_cmd->add_option("--algorithm", algorithm_arg, "auto or a named algorithm");
    solve_cmd->add_option("--input", input, "Instance JSON")->required();
    solve_cmd->add_flag("--cross-check", cross_check, "Run every applicable algorithm and compare");
    solve_cmd->add_option("--seed", seed, "Recorded in the report");
    add_guards(solve_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Check an assignment and print its certificate");
    verify_cmd->add_option("--concept", concept_arg, "ns | is | core");
    verify_cmd->add_option("--input", input, "Instance JSON")->required();
    verify_cmd->add_option("--assignment", assignment_path, "Assignment JSON")->required();

    std::string family, params_arg, out_path, witness_path, witness_out;
    auto* gen_cmd = app.add_subcommand("gen", "Write a generated instance");
    gen_cmd->add_option("family", family, "Instance family")->required();
    gen_cmd->add_option("--params", params_arg, "Family parameters: a JSON file or inline JSON");
    gen_cmd->add_option("--out", out_path, "Instance output file (stdout when absent)");
    gen_cmd->add_option("--witness", witness_path, "Source solution JSON; writes the matching assignment");
    gen_cmd->add_option("--witness-out", witness_out, "Assignment output file (default: <out>.witness.json)");
    gen_cmd->add_option("--seed", seed, "Seed for the random family");

    std::string config_path;
    int jobs_flag = 0;
    auto* bench_cmd = app.add_subcommand("bench", "Run a sweep and write CSV");
    bench_cmd->add_option("--config", config_path, "Sweep config (TOML)")->required();
    bench_cmd->add_option("--out", out_path, "CSV output file (stdout when absent)");
    bench_cmd->add_option("--jobs", jobs_flag, "Worker threads");
    add_guards(bench_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kInvalid;
    }

    Guards guards;
    if (max_p) guards.max_p_tree = guards.max_p_components = guards.max_p_clique = *max_p;
    if (max_component) guards.max_component = *max_component;
    if (budget) guards.oracle_budget = guards.subset_budget = *budget;

    try {
        auto concept_ = parse_concept(concept_arg);
        if (!concept_) throw InputError("unknown concept '" + concept_arg + "'");

        if (solve_cmd->parsed()) {
            auto alg = parse_algorithm(algorithm_arg);
            if (!alg) throw InputError("unknown algorithm '" + algorithm_arg + "'");
            const Instance inst = load_instance(read_file(input));
            SolveOptions opt;
            opt.concept_ = *concept_;
            opt.algorithm = *alg;
            opt.guards = guards;
            opt.cross_check = cross_check;
            opt.seed = seed;
            SolveOutcome r = solve(inst, opt);
            out << r.report;
            if (!r.error.empty()) err << r.error << "\n";
            return r.exit_code;
        }
        if (verify_cmd->parsed()) {
            const Instance inst = load_instance(read_file(input));
            const Assignment pi = load_assignment(inst, read_file(assignment_path));
            const Certificate cert = certify(inst, pi, *concept_);
            out << json::parse(certificate_json(inst, cert)).dump(2) << "\n";
            return cert.stable ? kFound : kNone;
        }
        if (gen_cmd->parsed()) {
            json params = json::object();
            if (!params_arg.empty()) {
                const bool inline_json = params_arg.find_first_not_of(" \t\n") != std::string::npos &&
                                         params_arg[params_arg.find_first_not_of(" \t\n")] == '{';
                params = parse_json(inline_json ? params_arg : read_file(params_arg), "params");
            }
            std::optional<json> solution;
            if (!witness_path.empty()) solution = parse_json(read_file(witness_path), "source solution");
            GenResult g = generate(family, params, solution, seed);
            const std::string text = save_instance(g.instance);
            if (out_path.empty())
                out << text << "\n";
            else
                write_file(out_path, text + "\n");
            if (g.witness) {
                std::string target = witness_out;
                if (target.empty()) {
                    if (out_path.empty()) throw InputError("--witness needs --out or --witness-out");
                    target = out_path + ".witness.json";
                }
                write_file(target, save_assignment(g.instance, *g.witness) + "\n");
            }
            return kFound;
        }
        if (bench_cmd->parsed()) return bench(config_path, out_path, jobs_flag, guards, out);
    } catch (const InputError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const ParseError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const ValidationError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kInvalid;
    } catch (const PreconditionError& e) {
        err << "refused: " << e.what() << "\n";
        return kRefused;
    } catch (const BudgetExceeded& e) {
        err << "refused: " << e.what() << "\n";
        return kRefused;
    }
    return kInvalid;
}

}  // namespace ggasp::cli
