#include "ascheck/cli.hpp"

#include "ascheck/errors.hpp"
#include "ascheck/model_io.hpp"
#include "ascheck/report.hpp"
#include "ascheck/svg.hpp"
#include "ascheck/testfns.hpp"

namespace ascheck {

namespace {

std::string join_argv(const std::vector<std::string>& argv) {
    std::string s;
    for (std::size_t i = 0; i < argv.size(); ++i) {
        if (i != 0) s += ' ';
        s += argv[i];
    }
    return s;
}

// The shared back half of check/testfn: fit, direction, diagnostics,
// artifacts. Returns the exit status.
int finish_check(CheckReport r, const SampleSet& s, const CheckOptions& opt,
                 const std::optional<std::vector<double>>& known_direction, std::ostream& out) {
    std::filesystem::create_directories(opt.out_dir);
    const auto samples_path = opt.out_dir / "samples.csv";
    persist_csv(s, samples_path);
    r.files.emplace_back("samples", samples_path.string());

    r.n_samples = s.size();
    r.seed = s.seed;
    r.fit = fit_linear(s);
    r.zero_threshold = zero_gradient_threshold(r.fit);
    r.direction = active_direction(r.fit);
    r.known_direction = known_direction;

    if (r.direction) {
        const auto& dir = *r.direction;
        const SummaryScatter sc = summary_projection(s, dir);
        r.metrics = sc.metrics;
        r.importance = importance_weights(dir);
        r.corner_max = corner_suggestion(s.domain, dir, OptimizationSense::maximize);
        r.corner_min = corner_suggestion(s.domain, dir, OptimizationSense::minimize);
        r.tie_indices = corner_ties(dir);
        if (known_direction) r.angle_deg = angle_between_deg(dir.w, *known_direction);

        if (opt.plot == PlotKind::csv || opt.plot == PlotKind::both) {
            const auto p = opt.out_dir / "scatter.csv";
            write_scatter_csv(sc, p);
            r.files.emplace_back("scatter", p.string());
        }
        if (opt.plot == PlotKind::svg || opt.plot == PlotKind::both) {
            const auto p = opt.out_dir / "scatter.svg";
            emit_scatter_svg(sc, p);
            r.files.emplace_back("plot", p.string());
        }
    }

    r.files.emplace_back("report", (opt.out_dir / "report.txt").string());
    r.files.emplace_back("report_json", (opt.out_dir / "report.json").string());
    write_report_files(r, opt.out_dir);
    out << to_text(r);
    return r.zero_gradient() ? kExitZeroGradient : kExitOk;
}

SampleSet build_samples(const InputDomain& d, const CheckOptions& opt, const ModelFn& model) {
    const std::size_t n = opt.n.value_or(default_sample_count(d.dimension()));
    Matrix xhat = draw_samples(d.dimension(), n, opt.seed);
    return evaluate_model(d, std::move(xhat), model, opt.workers, opt.seed);
}

}  // namespace

int run_check(const CheckOptions& opt, std::ostream& out) {
    const bool have_cmd = !opt.model_cmd.empty();
    const bool have_csv = opt.samples_in.has_value();
    if (have_cmd == have_csv)
        throw Error("exactly one of --model-cmd and --samples-in is required");
    if (have_csv && opt.n)
        throw Error("--n cannot be combined with --samples-in (N is the file's row count)");
    if (opt.workers < 1) throw Error("--workers must be at least 1");

    const InputDomain domain = load_bounds_file(opt.bounds);
    CheckReport r{.model_label = have_cmd ? join_argv(opt.model_cmd)
                                          : "ingested " + opt.samples_in->string(),
                  .domain = domain};

    SampleSet s = have_cmd
                      ? build_samples(domain, opt,
                                      subprocess_model(ModelCommand{
                                          opt.model_cmd, std::nullopt, opt.workers}))
                      : ingest_csv(*opt.samples_in, domain);
    return finish_check(std::move(r), s, opt, std::nullopt, out);
}

int run_testfn(const std::string& name, const CheckOptions& opt, std::ostream& out) {
    if (opt.workers < 1) throw Error("--workers must be at least 1");
    const AnalyticModel model = builtin(name, opt.seed);
    CheckReport r{.model_label = "builtin " + model.name, .domain = model.domain};
    r.ridge_coefficients = model.ridge_coefficients;

    const SampleSet s = build_samples(model.domain, opt, model.evaluate);
    return finish_check(std::move(r), s, opt, model.known_direction, out);
}

int run_testfn_export(const std::string& name, std::uint64_t seed,
                      const std::filesystem::path& dir, std::ostream& out) {
    const AnalyticModel model = builtin(name, seed);
    const auto script = export_script(model, dir);
    out << "script: " << script.string() << "\n";
    out << "bounds: " << (dir / (model.name + ".bounds")).string() << "\n";
    return kExitOk;
}

}  // namespace ascheck
