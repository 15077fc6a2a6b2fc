#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ascheck/cli.hpp"
#include "ascheck/errors.hpp"

namespace {

ascheck::PlotKind parse_plot(const std::string& s) {
    if (s == "svg") return ascheck::PlotKind::svg;
    if (s == "csv") return ascheck::PlotKind::csv;
    return ascheck::PlotKind::both;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ascheck: quick check for a one-dimensional active subspace.\n"
        "Samples a scalar model on its input box, fits a linear trend, and\n"
        "reports the dominant direction, parameter ranking, summary scatter,\n"
        "and corner suggestions. Exit 0 = direction found, 2 = no linear\n"
        "trend (ZeroGradient), 1 = failure."};
    app.require_subcommand(1);

    ascheck::CheckOptions opt;
    std::size_t n_value = 0;
    std::string plot = "both";
    std::string bounds;
    std::string samples_in;
    std::string out_dir = ".";

    auto add_run_flags = [&](CLI::App* cmd) {
        auto* n_opt = cmd->add_option("--n", n_value, "Sample count (default 4m)");
        cmd->add_option("--seed", opt.seed, "RNG seed (default 0)");
        cmd->add_option("--out-dir", out_dir, "Output directory (default .)");
        cmd->add_option("--workers", opt.workers, "Concurrent evaluations (default 1)");
        cmd->add_option("--plot", plot, "Scatter artifacts: svg, csv, or both (default both)")
            ->check(CLI::IsMember({"svg", "csv", "both"}));
        return n_opt;
    };

    auto* check = app.add_subcommand("check", "Run the check against an external model");
    check->add_option("--bounds", bounds, "Bounds file: one `name lower upper` line per parameter")
        ->required();
    auto* cmd_opt = check->add_option("--model-cmd", opt.model_cmd,
                                      "Model command (program and arguments; repeatable)");
    auto* csv_opt =
        check->add_option("--samples-in", samples_in, "Reuse a previously written samples CSV");
    cmd_opt->excludes(csv_opt);
    auto* check_n = add_run_flags(check);

    auto* testfn = app.add_subcommand("testfn", "Run the check against a builtin analytic model");
    std::string name;
    testfn->add_option("name", name, "Builtin name, e.g. exp2, linear-10, ridge-exp-5")
        ->required();
    std::string export_dir;
    auto* export_opt = testfn->add_option(
        "--export", export_dir, "Write the builtin as a subprocess script + bounds file and exit");
    auto* testfn_n = add_run_flags(testfn);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ascheck::kExitFailure;
    }

    opt.out_dir = out_dir;
    opt.plot = parse_plot(plot);

    try {
        if (app.got_subcommand(check)) {
            if (*check_n) opt.n = n_value;
            opt.bounds = bounds;
            if (*csv_opt) opt.samples_in = samples_in;
            return ascheck::run_check(opt, std::cout);
        }
        if (*export_opt) return ascheck::run_testfn_export(name, opt.seed, export_dir, std::cout);
        if (*testfn_n) opt.n = n_value;
        return ascheck::run_testfn(name, opt, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ascheck::kExitFailure;
    }
}
