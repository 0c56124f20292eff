#include "cli.hpp"

#include "manifest.hpp"

#include "fournet/config.hpp"
#include "fournet/decision.hpp"
#include "fournet/dot.hpp"
#include "fournet/error.hpp"
#include "fournet/estimators.hpp"
#include "fournet/sequence.hpp"
#include "fournet/serialization.hpp"
#include "fournet/simulation.hpp"
#include "fournet/style.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <cstdlib>
#include <optional>
#include <ostream>
#include <vector>

namespace fournet::cli {

namespace {

constexpr const char* kConfigEnv = "FOURNET_CONFIG";

struct GlobalArgs {
    std::string config_path;
};

struct DecideArgs {
    std::string state;
    std::string style = "1:1";
    std::optional<double> threshold;
    std::string tie_break;
    std::string dot;
    bool json = false;
};

struct SimulateArgs {
    std::string state;
    std::string style = "1:1";
    std::optional<double> threshold;
    std::size_t trials = 1;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
    std::optional<int> max_steps;
    std::string out;
    bool json = false;
};

struct AnalyzeArgs {
    std::string log;
    bool json = false;
};

struct CompareArgs {
    std::string state;
    std::string styles = "3:1,1:3,2:2";
    std::optional<double> threshold;
    std::size_t trials = 1000;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
    std::string csv;
    bool json = false;
};

struct FrontierArgs {
    std::string log;
    std::string targets;
    bool json = false;
};

// Human-readable numbers: at most six significant digits.
std::string num(double v) { return fmt::format("{:.6g}", v); }

Config resolve_config(const std::string& flag_path) {
    if (!flag_path.empty())
        return load_config(flag_path);
    if (const char* env = std::getenv(kConfigEnv); env != nullptr && *env != '\0')
        return load_config(env);
    return Config{};
}

std::vector<LinearStyle> parse_style_list(std::string_view text) {
    std::vector<LinearStyle> styles;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        styles.push_back(parse_style(part));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return styles;
}

std::string describe(const Decision& d) {
    if (is_shoot(d))
        return "shoot";
    const auto& pass = std::get<Pass>(d);
    return fmt::format("pass to t{} (score {}){}", pass.target.value(), num(pass.score),
                       pass.degenerate ? " [degenerate: no teammate has a positive score]" : "");
}

std::string style_line(const LinearStyle& style) {
    const auto imp = importance(style);
    return fmt::format("{} ({}; imp(p)={}, imp(r)={})", to_string(style), to_string(classify(style)),
                       num(imp.pass), num(imp.risk));
}

RunManifest make_manifest(std::span<const std::string> args, const Config& config,
                          const std::vector<std::string>& input_paths, std::uint64_t seed) {
    RunManifest m;
    m.tool_version = FOURNET_VERSION;
    m.command.assign(args.begin(), args.end());
    m.config = config;
    for (const auto& path : input_paths)
        m.inputs.push_back({path, sha256_hex(read_file(path))});
    m.seed = seed;
    m.timestamp = utc_timestamp();
    return m;
}

int run_decide(const DecideArgs& a, Config config, std::ostream& out) {
    if (a.threshold)
        config.simulation.threshold = *a.threshold;
    if (!a.tie_break.empty())
        config.simulation.tie_break = parse_tie_break(a.tie_break);
    const MatchState state = parse_match_state(read_file(a.state));
    const LinearStyle style = parse_style(a.style);
    const DecisionPolicy policy(style, config.simulation.threshold, config.simulation.tie_break);
    const DecisionNetwork network = estimate_network(state, default_estimators(config.estimators));
    const Decision decision = decide(network, policy);
    const auto ranked = ranked_options(network, policy);

    if (!a.dot.empty())
        write_file_atomic(a.dot, export_network_dot(network));

    if (a.json) {
        Json ranking = Json::array();
        for (const auto& opt : ranked)
            ranking.push_back(Json{{"id", opt.id.value()}, {"score", opt.score}});
        Json doc{{"style", to_string(style)},
                 {"threshold", policy.threshold()},
                 {"network", to_json(network)},
                 {"decision", to_json(decision)},
                 {"ranked", ranking}};
        out << dump_canonical(doc);
        return kExitOk;
    }

    fmt::print(out, "holder      t{}\n", network.holder().value());
    fmt::print(out, "s           {}\n", num(network.s()));
    fmt::print(out, "tau         {}\n", num(network.tau()));
    fmt::print(out, "threshold   {}\n", num(policy.threshold()));
    fmt::print(out, "style       {}\n", style_line(style));
    fmt::print(out, "decision    {}\n\n", describe(decision));
    fmt::print(out, "{:>4}  {:<4}  {:>10}  {:>3}  {:>10}  {}\n", "rank", "id", "p", "r", "score", "available");
    for (std::size_t k = 0; k < ranked.size(); ++k) {
        const auto& v = network.edge(ranked[k].id);
        fmt::print(out, "{:>4}  t{:<3}  {:>10}  {:>3}  {:>10}  {}\n", k + 1, ranked[k].id.value(), num(v.p), v.r,
                   num(ranked[k].score), is_available(state, ranked[k].id) ? "yes" : "no");
    }
    return kExitOk;
}

Json summary_json(const TrialSummary& s) {
    return Json{{"trials", s.trials},
                {"mean_efficiency", s.mean_efficiency},
                {"mean_security", s.mean_security},
                {"goal_rate", s.goal_rate},
                {"mean_length", s.mean_length}};
}

int run_simulate(const SimulateArgs& a, Config config, std::span<const std::string> args, std::ostream& out) {
    if (a.threshold)
        config.simulation.threshold = *a.threshold;
    if (a.seed)
        config.simulation.seed = *a.seed;
    if (a.threads)
        config.simulation.threads = *a.threads;
    if (a.max_steps)
        config.simulation.max_steps = *a.max_steps;
    if (a.trials == 0)
        throw ValidationError("--trials must be at least 1");

    const MatchState state = parse_match_state(read_file(a.state));
    const LinearStyle style = parse_style(a.style);
    const SimulationConfig cfg = make_simulation_config(config, style);
    const auto rollouts = run_trials(state, cfg, 0, a.trials);
    const TrialSummary summary = summarize(rollouts);

    std::vector<PossessionSequence> seqs;
    seqs.reserve(rollouts.size());
    for (const auto& r : rollouts)
        seqs.push_back(r.sequence);

    if (!a.out.empty()) {
        const Json log = a.trials == 1 ? to_json(seqs.front()) : to_json(seqs);
        write_file_atomic(a.out, dump_canonical(log));
        const auto manifest = make_manifest(args, config, {a.state}, config.simulation.seed);
        write_file_atomic(a.out + ".manifest.json", dump_canonical(to_json(manifest)));
    }

    if (a.json) {
        Json per_trial = Json::array();
        for (const auto& r : rollouts)
            per_trial.push_back(Json{{"efficiency", r.metrics.efficiency()},
                                     {"security", r.metrics.security()},
                                     {"steps", r.sequence.size()},
                                     {"outcome", std::string(to_string(r.sequence.final_step().outcome))}});
        out << dump_canonical(Json{{"style", to_string(style)},
                                   {"seed", config.simulation.seed},
                                   {"summary", summary_json(summary)},
                                   {"trials", per_trial}});
        return kExitOk;
    }

    if (a.trials == 1) {
        const auto& seq = seqs.front();
        fmt::print(out, "{:>4}  {:<6}  {:>10}  {:>10}  {:<24}  {}\n", "step", "holder", "s", "tau", "decision",
                   "outcome");
        for (std::size_t k = 0; k < seq.size(); ++k) {
            const auto& step = seq.steps()[k];
            std::string decision = "shoot";
            if (const auto* pass = std::get_if<Pass>(&step.decision))
                decision = fmt::format("pass t{} (p={})", pass->target.value(),
                                       num(step.network.edge(pass->target).p));
            fmt::print(out, "{:>4}  t{:<5}  {:>10}  {:>10}  {:<24}  {}\n", k, step.network.holder().value(),
                       num(step.network.s()), num(step.network.tau()), decision, to_string(step.outcome));
        }
        out << "\n";
    }
    fmt::print(out, "style            {}\n", style_line(style));
    fmt::print(out, "seed             {}\n", config.simulation.seed);
    fmt::print(out, "trials           {}\n", summary.trials);
    fmt::print(out, "mean efficiency  {}\n", num(summary.mean_efficiency));
    fmt::print(out, "mean security    {}\n", num(summary.mean_security));
    fmt::print(out, "goal rate        {}\n", num(summary.goal_rate));
    fmt::print(out, "mean length      {}\n", num(summary.mean_length));
    return kExitOk;
}

int run_analyze(const AnalyzeArgs& a, std::ostream& out) {
    const auto seqs = parse_sequence_logs(read_file(a.log));
    if (a.json) {
        Json rows = Json::array();
        for (const auto& seq : seqs)
            rows.push_back(Json{{"efficiency", efficiency(seq)},
                                {"security", security(seq)},
                                {"steps", seq.size()},
                                {"outcome", std::string(to_string(seq.final_step().outcome))}});
        out << dump_canonical(seqs.size() == 1 ? rows.front() : rows);
        return kExitOk;
    }
    if (seqs.size() == 1) {
        const auto& seq = seqs.front();
        fmt::print(out, "steps       {}\n", seq.size());
        fmt::print(out, "efficiency  {}\n", num(efficiency(seq)));
        fmt::print(out, "security    {}\n", num(security(seq)));
        fmt::print(out, "outcome     {}\n", to_string(seq.final_step().outcome));
        return kExitOk;
    }
    fmt::print(out, "{:>5}  {:>5}  {:>10}  {:>10}  {}\n", "index", "steps", "efficiency", "security", "outcome");
    for (std::size_t i = 0; i < seqs.size(); ++i)
        fmt::print(out, "{:>5}  {:>5}  {:>10}  {:>10}  {}\n", i, seqs[i].size(), num(efficiency(seqs[i])),
                   num(security(seqs[i])), to_string(seqs[i].final_step().outcome));
    return kExitOk;
}

int run_compare(const CompareArgs& a, Config config, std::span<const std::string> args, std::ostream& out) {
    if (a.threshold)
        config.simulation.threshold = *a.threshold;
    if (a.seed)
        config.simulation.seed = *a.seed;
    if (a.threads)
        config.simulation.threads = *a.threads;

    const MatchState state = parse_match_state(read_file(a.state));
    const auto styles = parse_style_list(a.styles);
    const SimulationConfig base = make_simulation_config(config, styles.front());
    const auto reports = monte_carlo_compare(state, styles, a.trials, base);

    if (!a.csv.empty()) {
        std::string csv = "style,class,trials,mean_efficiency,mean_security,goal_rate,mean_length\n";
        for (const auto& r : reports)
            csv += fmt::format("{},{},{},{},{},{},{}\n", to_string(r.style), to_string(classify(r.style)),
                               r.summary.trials, r.summary.mean_efficiency, r.summary.mean_security,
                               r.summary.goal_rate, r.summary.mean_length);
        write_file_atomic(a.csv, csv);
        const auto manifest = make_manifest(args, config, {a.state}, config.simulation.seed);
        write_file_atomic(a.csv + ".manifest.json", dump_canonical(to_json(manifest)));
    }

    if (a.json) {
        Json rows = Json::array();
        for (const auto& r : reports) {
            Json row = summary_json(r.summary);
            row["style"] = to_string(r.style);
            row["class"] = std::string(to_string(classify(r.style)));
            rows.push_back(std::move(row));
        }
        out << dump_canonical(Json{{"seed", config.simulation.seed}, {"reports", rows}});
        return kExitOk;
    }

    fmt::print(out, "{:<7}  {:<10}  {:>7}  {:>10}  {:>10}  {:>10}  {:>10}\n", "style", "class", "trials",
               "mean_eff", "mean_sec", "goal_rate", "mean_len");
    for (const auto& r : reports)
        fmt::print(out, "{:<7}  {:<10}  {:>7}  {:>10}  {:>10}  {:>10}  {:>10}\n", to_string(r.style),
                   to_string(classify(r.style)), r.summary.trials, num(r.summary.mean_efficiency),
                   num(r.summary.mean_security), num(r.summary.goal_rate), num(r.summary.mean_length));
    return kExitOk;
}

int run_frontier(const FrontierArgs& a, std::ostream& out) {
    const auto seqs = parse_sequence_logs(read_file(a.log));
    const auto front = pareto_frontier(std::span<const PossessionSequence>(seqs));

    std::optional<std::pair<double, double>> targets;
    if (!a.targets.empty()) {
        auto colon = a.targets.find(':');
        if (colon == std::string::npos)
            throw ValidationError(fmt::format("invalid --targets '{}' (expected s:p)", a.targets));
        try {
            targets.emplace(std::stod(a.targets.substr(0, colon)), std::stod(a.targets.substr(colon + 1)));
        } catch (const std::exception&) {
            throw ValidationError(fmt::format("invalid --targets '{}' (expected s:p)", a.targets));
        }
    }

    if (a.json) {
        Json rows = Json::array();
        for (const auto& pt : front) {
            Json row{{"index", pt.index}, {"efficiency", pt.efficiency}, {"security", pt.security}};
            if (targets)
                row["balance"] = balance_score({pt.efficiency, pt.security}, targets->first, targets->second);
            rows.push_back(std::move(row));
        }
        out << dump_canonical(Json{{"sequences", seqs.size()}, {"frontier", rows}});
        return kExitOk;
    }

    fmt::print(out, "{} sequences, {} on the frontier\n", seqs.size(), front.size());
    fmt::print(out, "{:>5}  {:>10}  {:>10}{}\n", "index", "efficiency", "security", targets ? "  balance" : "");
    for (const auto& pt : front) {
        std::string balance;
        if (targets)
            balance = "  " + num(balance_score({pt.efficiency, pt.security}, targets->first, targets->second));
        fmt::print(out, "{:>5}  {:>10}  {:>10}{}\n", pt.index, num(pt.efficiency), num(pt.security), balance);
    }
    return kExitOk;
}

} // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ball-holder decision engine and possession simulator on 4-networks", "fournet"};
    app.require_subcommand(1);
    app.set_version_flag("--version", FOURNET_VERSION);

    GlobalArgs global;
    app.add_option("--config", global.config_path,
                   std::string("Config file (JSON); defaults to $") + kConfigEnv);

    DecideArgs decide_args;
    auto* decide_cmd = app.add_subcommand("decide", "Build the holder's 4-network and print the decision");
    decide_cmd->add_option("--state", decide_args.state, "Match state JSON")->required();
    decide_cmd->add_option("--style", decide_args.style, "Game style x:y")->capture_default_str();
    decide_cmd->add_option("--threshold", decide_args.threshold, "Shooting threshold in [0, 1]");
    decide_cmd->add_option("--tie-break", decide_args.tie_break, "lowest-id or highest-id");
    decide_cmd->add_option("--dot", decide_args.dot, "Write the 4-network as a DOT graph");
    decide_cmd->add_flag("--json", decide_args.json, "Machine-readable output");

    SimulateArgs sim_args;
    auto* sim_cmd = app.add_subcommand("simulate", "Roll out possessions from a match state");
    sim_cmd->add_option("--state", sim_args.state, "Match state JSON")->required();
    sim_cmd->add_option("--style", sim_args.style, "Game style x:y")->capture_default_str();
    sim_cmd->add_option("--threshold", sim_args.threshold, "Shooting threshold in [0, 1]");
    sim_cmd->add_option("--trials", sim_args.trials, "Number of possessions")->capture_default_str();
    sim_cmd->add_option("--seed", sim_args.seed, "Base seed");
    sim_cmd->add_option("--threads", sim_args.threads, "Worker threads (0 = all cores)");
    sim_cmd->add_option("--max-steps", sim_args.max_steps, "Step cap per possession");
    sim_cmd->add_option("--out", sim_args.out, "Write the sequence log (and a run manifest)");
    sim_cmd->add_flag("--json", sim_args.json, "Machine-readable output");

    AnalyzeArgs analyze_args;
    auto* analyze_cmd = app.add_subcommand("analyze", "Efficiency and security of logged sequences");
    analyze_cmd->add_option("--log", analyze_args.log, "Sequence log JSON")->required();
    analyze_cmd->add_flag("--json", analyze_args.json, "Machine-readable output");

    CompareArgs compare_args;
    auto* compare_cmd = app.add_subcommand("compare", "Monte Carlo comparison of game styles");
    compare_cmd->add_option("--state", compare_args.state, "Match state JSON")->required();
    compare_cmd->add_option("--styles", compare_args.styles, "Comma-separated styles")->capture_default_str();
    compare_cmd->add_option("--threshold", compare_args.threshold, "Shooting threshold in [0, 1]");
    compare_cmd->add_option("--trials", compare_args.trials, "Possessions per style")->capture_default_str();
    compare_cmd->add_option("--seed", compare_args.seed, "Base seed");
    compare_cmd->add_option("--threads", compare_args.threads, "Worker threads (0 = all cores)");
    compare_cmd->add_option("--csv", compare_args.csv, "Write the report as CSV (and a run manifest)");
    compare_cmd->add_flag("--json", compare_args.json, "Machine-readable output");

    FrontierArgs frontier_args;
    auto* frontier_cmd = app.add_subcommand("frontier", "Pareto frontier of (efficiency, security)");
    frontier_cmd->add_option("--log", frontier_args.log, "Sequence log JSON (one or many sequences)")->required();
    frontier_cmd->add_option("--targets", frontier_args.targets, "s:p targets for the balance score");
    frontier_cmd->add_flag("--json", frontier_args.json, "Machine-readable output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << FOURNET_VERSION << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        const Config config = resolve_config(global.config_path);
        if (*decide_cmd)
            return run_decide(decide_args, config, out);
        if (*sim_cmd)
            return run_simulate(sim_args, config, args, out);
        if (*analyze_cmd)
            return run_analyze(analyze_args, out);
        if (*compare_cmd)
            return run_compare(compare_args, config, args, out);
        if (*frontier_cmd)
            return run_frontier(frontier_args, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    err << app.help();
    return kExitUsage;
}

} // namespace fournet::cli
