#include "rfrac/app.hpp"

#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "rfrac/errors.hpp"
#include "rfrac/report.hpp"

namespace rfrac::cli {
namespace {

struct Overrides {
    std::string model;
    std::vector<std::string> sets;
    std::vector<std::string> at;
    std::vector<std::string> checks;
    std::string out;
    std::string format;
    int threads = 0;
    int N = 0;
    int depth = 0;
    std::uint64_t seed = 0;
    bool timings = false;
};

void add_overrides(CLI::App& cmd, Overrides& o) {
    cmd.add_option("--model", o.model, "Model name (see list-models)");
    cmd.add_option("--set", o.sets, "Model parameter, key=value; complex values as 0.3+0.2i")->allow_extra_args(false);
    cmd.add_option("--at", o.at, "Evaluation point for identity checks (repeatable)")->allow_extra_args(false);
    cmd.add_option("--out", o.out, "Report path (default: stdout)");
    cmd.add_option("--format", o.format, "json or csv");
    cmd.add_option("--threads", o.threads, "Checks evaluated concurrently")->check(CLI::PositiveNumber);
    cmd.add_option("-N,--N", o.N, "Matrix size / highest degree + 1")->check(CLI::PositiveNumber);
    cmd.add_option("--depth", o.depth, "Convergent index for pincherle")->check(CLI::PositiveNumber);
    cmd.add_option("--seed", o.seed, "Seed for random-draw checks");
    cmd.add_flag("--timings", o.timings, "Record runtime_ms (reports are then not reproducible)");
}

void apply(RunConfig& cfg, const CLI::App& cmd, const Overrides& o) {
    if (cmd.count("--model")) cfg.model = o.model;
    for (const auto& s : o.sets) apply_set(cfg, s);
    if (!o.at.empty()) {
        cfg.at.clear();
        for (const auto& s : o.at) cfg.at.push_back(parse_complex(s));
    }
    if (cmd.count("--out")) cfg.out_path = o.out;
    if (cmd.count("--format")) cfg.format = parse_format(o.format);
    if (cmd.count("--threads")) cfg.threads = o.threads;
    if (cmd.count("--N")) cfg.N = o.N;
    if (cmd.count("--depth")) cfg.depth = o.depth;
    if (cmd.count("--seed")) cfg.seed = o.seed;
    if (o.timings) cfg.timings = true;
}

int emit(const RunConfig& cfg, const Report& report, std::ostream& out) {
    const std::string text = render(report, cfg.format);
    if (cfg.out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f || !(f << text)) throw ParseError("cannot write " + cfg.out_path);
        for (const auto& r : report)
            out << (r.pass ? "PASS " : "FAIL ") << r.check << "  " << r.model << "  " << r.anchor << "  "
                << r.detail << '\n';
    }
    return all_pass(report) ? 0 : 1;
}

} // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Verification harness for R_I / R_II continued fractions and their biorthogonal families",
                 "rfrac"};
    app.require_subcommand(1);

    std::string config_path;
    Overrides run_o;
    auto* run_cmd = app.add_subcommand("run", "Run the checks listed in a config file");
    run_cmd->add_option("config", config_path, "Config file")->required();
    run_cmd->add_option("--check", run_o.checks, "Replace the config's check list (repeatable)")
        ->allow_extra_args(false);
    add_overrides(*run_cmd, run_o);

    app.add_subcommand("list-models", "Print the model catalog");
    app.add_subcommand("list-checks", "Print the check ids with their models and default tolerances");

    std::string check_id;
    Overrides check_o;
    auto* check_cmd = app.add_subcommand("check", "Run a single check (ids: list-checks)");
    check_cmd->add_option("id", check_id, "Check id")->required();
    add_overrides(*check_cmd, check_o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("list-models")) {
            out << list_models();
            return 0;
        }
        if (app.got_subcommand("list-checks")) {
            out << list_checks();
            return 0;
        }
        RunConfig cfg;
        if (*run_cmd) {
            cfg = load_config(config_path);
            if (!run_o.checks.empty()) cfg.checks = run_o.checks;
            apply(cfg, *run_cmd, run_o);
        } else {
            cfg.checks = {check_id};
            apply(cfg, *check_cmd, check_o);
        }
        return emit(cfg, run(cfg), out);
    } catch (const rfrac::ParseError& e) {
        err << "rfrac: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "rfrac: domain error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "rfrac: " << e.what() << '\n';
        return 1;
    }
}

} // namespace rfrac::cli
