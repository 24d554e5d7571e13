#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsr/canon.hpp"
#include "qsr/catalog.hpp"
#include "qsr/enumerate.hpp"
#include "qsr/errors.hpp"
#include "qsr/graph6.hpp"
#include "qsr/qsr.hpp"
#include "qsr/version.hpp"

using nlohmann::json;

namespace {

// Exit codes: 0 success/true, 1 verified-false or analysis verdict,
// 2 usage/input error, 3 budget guard.
constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Classified {
    const char* type;
    int code;
};

Classified classify(const qsr::Error& e) {
    using namespace qsr;
    if (dynamic_cast<const BudgetExceeded*>(&e)) return {"budget_exceeded", kExitBudget};
    if (dynamic_cast<const NotRegular*>(&e)) return {"not_regular", kExitFalse};
    if (dynamic_cast<const AdjacentCountNotConstant*>(&e))
        return {"adjacent_count_not_constant", kExitFalse};
    if (dynamic_cast<const CompleteGraph*>(&e)) return {"complete_graph", kExitFalse};
    if (dynamic_cast<const EdgelessGraph*>(&e)) return {"edgeless_graph", kExitFalse};
    if (dynamic_cast<const MalformedHeader*>(&e)) return {"malformed_graph6", kExitUsage};
    if (dynamic_cast<const MalformedBody*>(&e)) return {"malformed_graph6", kExitUsage};
    if (dynamic_cast<const TruncatedBody*>(&e)) return {"malformed_graph6", kExitUsage};
    if (dynamic_cast<const TrailingGarbage*>(&e)) return {"malformed_graph6", kExitUsage};
    if (dynamic_cast<const CapacityExceeded*>(&e)) return {"capacity_exceeded", kExitUsage};
    if (dynamic_cast<const InvalidSpec*>(&e)) return {"invalid_spec", kExitUsage};
    if (dynamic_cast<const TooLargeForOracle*>(&e)) return {"too_large_for_oracle", kExitUsage};
    if (dynamic_cast<const DegreeTooSmall*>(&e)) return {"degree_too_small", kExitUsage};
    if (dynamic_cast<const UnknownName*>(&e)) return {"unknown_name", kExitUsage};
    return {"error", kExitUsage};
}

json base_report(const char* command, json input) {
    json r;
    r["command"] = command;
    r["version"] = qsr::kVersion;
    r["input"] = std::move(input);
    return r;
}

int emit_ok(json report, json result) {
    report["status"] = "ok";
    report["result"] = std::move(result);
    std::cout << report.dump(2) << "\n";
    return kExitOk;
}

int emit_error(json report, const char* type, const std::string& message, int code,
               json result = json()) {
    report["status"] = "error";
    report["error"] = {{"type", type}, {"message", message}};
    if (!result.is_null()) report["result"] = std::move(result);
    std::cout << report.dump(2) << "\n";
    std::cerr << "qsrtool: " << message << "\n";
    return code;
}

int emit_caught(json report, const qsr::Error& e) {
    const Classified c = classify(e);
    return emit_error(std::move(report), c.type, e.what(), c.code);
}

// "-" reads standard input; otherwise the named file. One graph6 line each.
std::vector<std::string> read_lines(const std::string& source) {
    std::vector<std::string> lines;
    auto drain = [&lines](std::istream& in) {
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
                line.pop_back();
            if (!line.empty()) lines.push_back(line);
        }
    };
    if (source == "-") {
        drain(std::cin);
    } else {
        std::ifstream in(source);
        if (!in) throw qsr::Error("cannot open " + source);
        drain(in);
    }
    return lines;
}

json signature_json(const qsr::QsrSignature& sig) {
    return {{"n", sig.n},       {"k", sig.k},         {"a", sig.a},
            {"c_values", sig.c_values},               {"grade", sig.grade},
            {"proper", sig.proper},                   {"strict", sig.strict}};
}

json profiles_json(const qsr::Graph& g, const std::vector<int>& c_list) {
    json arr = json::array();
    for (int v = 0; v < g.order(); ++v) {
        const qsr::TProfile p = qsr::t_profile(g, v, c_list);
        json counts = json::array();
        for (auto [c, t] : p.counts) counts.push_back({{"c", c}, {"t", t}});
        arr.push_back({{"vertex", v}, {"counts", counts}});
    }
    return arr;
}

int resolve_jobs(const CLI::Option* jobs_opt, int jobs_flag) {
    if (jobs_opt->count() > 0) return jobs_flag;
    if (const char* env = std::getenv("QSR_JOBS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
        std::cerr << "qsrtool: ignoring invalid QSR_JOBS value '" << env << "'\n";
    }
    return 1;
}

int run_verify(const std::string& source, int n, int k, int a, const std::vector<int>& c_list,
               bool strict) {
    json report = base_report("verify", {{"source", source},
                                         {"n", n},
                                         {"k", k},
                                         {"a", a},
                                         {"c", c_list},
                                         {"strict", strict}});
    try {
        const std::vector<std::string> lines = read_lines(source);
        if (lines.empty())
            return emit_error(std::move(report), "empty_input", "no graph6 lines in " + source,
                              kExitUsage);
        int checked = 0;
        for (const std::string& line : lines) {
            const qsr::Graph g = qsr::decode_graph6(line);
            ++checked;
            const auto reason = qsr::explain_mismatch(g, n, k, a, c_list, strict);
            if (reason) {
                json result = {{"matches", false},
                               {"checked", checked},
                               {"first_failure",
                                {{"line", checked}, {"graph6", line}, {"reason", *reason}}}};
                return emit_error(std::move(report), "mismatch", *reason, kExitFalse,
                                  std::move(result));
            }
        }
        return emit_ok(std::move(report), {{"matches", true}, {"checked", checked}});
    } catch (const qsr::Error& e) {
        return emit_caught(std::move(report), e);
    }
}

int run_analyze(const std::string& source) {
    json report = base_report("analyze", {{"source", source}});
    try {
        const std::vector<std::string> lines = read_lines(source);
        if (lines.size() != 1)
            return emit_error(std::move(report), "bad_input",
                              "analyze expects exactly one graph6 line, got " +
                                  std::to_string(lines.size()),
                              kExitUsage);
        const qsr::Graph g = qsr::decode_graph6(lines[0]);
        const qsr::QsrSignature sig = qsr::analyze(g);
        json result = {{"graph6", lines[0]},
                       {"signature", signature_json(sig)},
                       {"profiles", profiles_json(g, sig.c_values)}};
        return emit_ok(std::move(report), std::move(result));
    } catch (const qsr::Error& e) {
        return emit_caught(std::move(report), e);
    }
}

int run_enumerate(const qsr::EnumSpec& spec, const qsr::EnumOptions& options, bool oracle,
                  const std::string& out_path) {
    json input = {{"n", spec.n},
                  {"k", spec.k},
                  {"a", spec.a},
                  {"c", spec.c_allowed},
                  {"proper", spec.require_all_realized},
                  {"strict", spec.require_strict},
                  {"oracle", oracle},
                  {"jobs", options.jobs},
                  {"shortcut", options.star_shortcut},
                  {"override_budget", options.override_budget}};
    if (!out_path.empty()) input["out"] = out_path;
    json report = base_report("enumerate", std::move(input));
    try {
        const qsr::EnumReport rep =
            oracle ? qsr::brute_force_enumerate(spec) : qsr::enumerate_graphs(spec, options);
        json classes = json::array();
        for (const auto& form : rep.classes) classes.push_back(form.bytes);
        json result = {{"class_count", rep.classes.size()},
                       {"classes", std::move(classes)},
                       {"nodes_explored", rep.nodes_explored},
                       {"complete", rep.complete},
                       {"elapsed_seconds", rep.elapsed_seconds}};
        if (!out_path.empty()) {
            qsr::write_census(out_path, rep);
            result["census"] = out_path;
            result["sidecar"] = out_path + ".meta.json";
        }
        return emit_ok(std::move(report), std::move(result));
    } catch (const qsr::Error& e) {
        return emit_caught(std::move(report), e);
    }
}

int run_bounds(int k) {
    json report = base_report("bounds", {{"k", k}});
    try {
        const qsr::Bounds b = qsr::sqsr_bounds(k);
        return emit_ok(std::move(report),
                       {{"k", b.k}, {"lower", b.lower}, {"upper", b.upper}});
    } catch (const qsr::Error& e) {
        return emit_caught(std::move(report), e);
    }
}

int run_catalog(const std::string& name, const std::string& out_path) {
    json input = {{"name", name}};
    if (!out_path.empty()) input["out"] = out_path;
    json report = base_report("catalog", std::move(input));
    try {
        const qsr::Graph g = qsr::build_named(name);
        const std::string line = qsr::encode_graph6(g);
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) throw qsr::Error("cannot open " + out_path);
            out << line << '\n';
        }
        json result = {{"name", name},
                       {"n", g.order()},
                       {"edge_count", g.edge_count()},
                       {"graph6", line}};
        if (!out_path.empty()) result["out"] = out_path;
        return emit_ok(std::move(report), std::move(result));
    } catch (const qsr::Error& e) {
        return emit_caught(std::move(report), e);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-strongly regular graph toolkit"};
    app.require_subcommand(1);

    std::string source;
    int n = 0, k = 0, a = 0;
    std::vector<int> c_list;
    bool strict = false, proper = false, oracle = false, override_budget = false;
    bool no_shortcut = false;
    int jobs = 1;
    std::string out_path, name;

    auto* verify = app.add_subcommand("verify", "check graph6 input against QSR parameters");
    verify->add_option("source", source, "graph6 file, or - for standard input")->required();
    verify->add_option("--n", n, "order")->required();
    verify->add_option("--k", k, "degree")->required();
    verify->add_option("--a", a, "adjacent common-neighbour count")->required();
    verify->add_option("--c", c_list, "non-adjacent counts, comma separated")
        ->required()
        ->delimiter(',');
    verify->add_flag("--strict", strict, "require a distinct from every c value");

    auto* analyze = app.add_subcommand("analyze", "report the QSR signature of one graph");
    analyze->add_option("source", source, "graph6 file, or - for standard input")->required();

    auto* enumerate = app.add_subcommand("enumerate", "exhaustive isomorph-free census");
    enumerate->add_option("--n", n, "order")->required();
    enumerate->add_option("--k", k, "degree")->required();
    enumerate->add_option("--a", a, "adjacent common-neighbour count")->required();
    enumerate->add_option("--c", c_list, "allowed non-adjacent counts, comma separated")
        ->required()
        ->delimiter(',');
    enumerate->add_flag("--strict", strict, "require a absent from realized counts");
    enumerate->add_flag("--proper", proper, "require every allowed count realized");
    enumerate->add_flag("--oracle", oracle, "use the brute-force oracle (n <= 8)");
    enumerate->add_flag("--no-shortcut", no_shortcut, "disable the star normalization");
    enumerate->add_flag("--override-budget", override_budget, "allow n beyond the default guard");
    auto* jobs_opt = enumerate->add_option("--jobs", jobs, "worker threads (default: QSR_JOBS or 1)");
    enumerate->add_option("--out", out_path, "census file path; sidecar written next to it");

    auto* bounds = app.add_subcommand("bounds", "order bounds for strict QSR(n,k,0;k-1,k-2,k-3)");
    bounds->add_option("--k", k, "degree, at least 4")->required();

    auto* catalog = app.add_subcommand("catalog", "emit a named graph from the built-in catalog");
    catalog->add_option("--name", name, "one of: " + [] {
        std::string all;
        for (const auto& s : qsr::catalog_names()) {
            if (!all.empty()) all += ", ";
            all += s;
        }
        return all;
    }())->required();
    catalog->add_option("--out", out_path, "write the graph6 line to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "qsrtool: " << e.what() << "\n";
        return kExitUsage;
    }

    if (verify->parsed()) return run_verify(source, n, k, a, c_list, strict);
    if (analyze->parsed()) return run_analyze(source);
    if (enumerate->parsed()) {
        qsr::EnumSpec spec;
        spec.n = n;
        spec.k = k;
        spec.a = a;
        spec.c_allowed = c_list;
        spec.require_all_realized = proper;
        spec.require_strict = strict;
        qsr::EnumOptions options;
        options.jobs = resolve_jobs(jobs_opt, jobs);
        options.star_shortcut = !no_shortcut;
        options.override_budget = override_budget;
        return run_enumerate(spec, options, oracle, out_path);
    }
    if (bounds->parsed()) return run_bounds(k);
    if (catalog->parsed()) return run_catalog(name, out_path);
    return kExitUsage;
}
