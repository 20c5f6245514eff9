// Command-line front end: corpus surveys, figure data and report suites.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sigroots/errors.hpp"
#include "sigroots/graph_polynomials.hpp"
#include "sigroots/limit_roots.hpp"
#include "sigroots/reports.hpp"
#include "sigroots/survey.hpp"

namespace fs = std::filesystem;
using namespace sigroots;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_input = 2;

/// Inputs longer than this need --large (checkpointed run).
constexpr std::size_t large_input_lines = 100000;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SurveyOptions {
    std::string input;
    int builtin_order = 0;
    bool connected_only = false;
    std::string out = ".";
    int workers = 1;
    bool large = false;
    bool svg = false;
    double residual = default_residual_bound;
    long long expect_count = -1;
};

std::size_t count_lines(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input " + path.string());
    std::size_t lines = 0;
    std::string line;
    while (std::getline(in, line)) ++lines;
    return lines;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
}

void write_svg(const fs::path& roots_csv, const fs::path& svg) {
    std::ifstream in(roots_csv);
    write_file(svg, roots_svg(read_roots_csv(in)));
}

int run_survey_command(const SurveyOptions& opt, const std::string& svg_name) {
    SurveyConfig cfg;
    if (!opt.input.empty()) cfg.input = opt.input;
    if (opt.builtin_order > 0) cfg.builtin_order = opt.builtin_order;
    cfg.connected_only = opt.connected_only;
    cfg.residual_bound = opt.residual;
    cfg.workers = opt.workers;
    try {
        cfg.validate();
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }

    if (cfg.input) {
        const std::size_t lines = count_lines(*cfg.input);
        if (opt.expect_count >= 0 && lines != static_cast<std::size_t>(opt.expect_count))
            throw InputError(cfg.input->string() + " has " + std::to_string(lines) + " lines, expected " +
                             std::to_string(opt.expect_count));
        if (lines > large_input_lines && !opt.large)
            throw InputError(cfg.input->string() + " has " + std::to_string(lines) +
                             " lines; pass --large for a checkpointed run");
    }

    const fs::path out_dir(opt.out);
    fs::create_directories(out_dir);
    const fs::path records_path = out_dir / "records.csv";
    const fs::path roots_path = out_dir / "roots.csv";
    const fs::path checkpoint_path = out_dir / "checkpoint.txt";

    // A resumed run truncates the outputs back to the last checkpointed batch.
    std::optional<SurveyCheckpoint> resume;
    if (opt.large) {
        cfg.checkpoint = checkpoint_path;
        resume = read_checkpoint(checkpoint_path);
    }
    std::ofstream records, roots;
    if (resume) {
        for (const auto& [key, value] : resume->extra) {
            if (key == "records_bytes") fs::resize_file(records_path, std::stoull(value));
            if (key == "roots_bytes") fs::resize_file(roots_path, std::stoull(value));
        }
        records.open(records_path, std::ios::binary | std::ios::app);
        roots.open(roots_path, std::ios::binary | std::ios::app);
    } else {
        records.open(records_path, std::ios::binary | std::ios::trunc);
        roots.open(roots_path, std::ios::binary | std::ios::trunc);
        records << csv_schema_tag << '\n' << records_csv_header() << '\n';
        roots << csv_schema_tag << '\n' << roots_csv_header() << '\n';
    }
    if (!records || !roots) throw InputError("cannot write to " + out_dir.string());

    cfg.on_batch_end = [&]() -> std::vector<std::pair<std::string, std::string>> {
        records.flush();
        roots.flush();
        return {{"records_bytes", std::to_string(static_cast<long long>(records.tellp()))},
                {"roots_bytes", std::to_string(static_cast<long long>(roots.tellp()))}};
    };

    SurveyResult result = run_survey(cfg, [&](const SurveyRecord& r) {
        records << records_csv_row(r) << '\n';
        roots << roots_csv_rows(r);
    });
    records.close();
    roots.close();

    const std::string summary = summary_text(result.summary);
    write_file(out_dir / "summary.txt", summary);
    if (opt.svg || !svg_name.empty()) write_svg(roots_path, out_dir / (svg_name.empty() ? "roots.svg" : svg_name));

    if (result.resumed_at) std::cerr << "resumed after input line " << *result.resumed_at << '\n';
    for (const auto& e : result.input_errors)
        std::cerr << "line " << e.line << ": " << e.message << '\n';
    std::cout << summary;

    if (result.summary.invariant_violations() > 0) return exit_violation;
    if (result.summary.errors > 0) return exit_input;
    return exit_ok;
}

void add_survey_options(CLI::App* cmd, SurveyOptions& opt) {
    auto* input = cmd->add_option("--input", opt.input, "graph6 corpus, one graph per line")->check(CLI::ExistingFile);
    auto* builtin = cmd->add_option("--builtin-order", opt.builtin_order, "enumerate all graphs of this order (1-7)")
                        ->check(CLI::Range(1, 7));
    input->excludes(builtin);
    cmd->add_flag("--connected-only", opt.connected_only, "skip disconnected graphs");
    cmd->add_option("--out", opt.out, "output directory");
    cmd->add_option("--workers", opt.workers, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--large", opt.large, "allow long inputs; checkpoint and resume in the output directory");
    cmd->add_flag("--svg", opt.svg, "also write roots.svg");
    cmd->add_option("--residual", opt.residual, "relative residual bound for numeric roots")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--expect-count", opt.expect_count, "required number of input lines");
}

void print_identities(const std::vector<IdentityCheck>& checks, bool& failed) {
    for (const auto& c : checks) {
        std::cout << c.name << ": checked " << c.checked << ", failures " << c.failures;
        if (c.failures) std::cout << ", first counterexample " << c.first_counterexample;
        std::cout << '\n';
        failed = failed || c.failures > 0;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sigma-polynomial roots: surveys, figures and identity checks"};
    app.require_subcommand(1);

    SurveyOptions survey_opt;
    auto* survey = app.add_subcommand("survey", "survey a graph corpus: records.csv, roots.csv, summary.txt");
    add_survey_options(survey, survey_opt);

    SurveyOptions figure_opt;
    figure_opt.builtin_order = 7;
    figure_opt.connected_only = true;
    auto* figure1 = app.add_subcommand("figure1", "roots of all connected 7-vertex graphs, with figure1.svg");
    add_survey_options(figure1, figure_opt);

    int h_min = 1, h_max = 7;
    std::string h_k = "n", h_t = "2", h_out = ".";
    bool h_svg = false;
    double h_residual = default_residual_bound;
    auto* hfamily = app.add_subcommand("hfamily", "nonreal adjoint roots of H(n,k,t) over a range of n");
    hfamily->add_option("--n-min", h_min)->check(CLI::PositiveNumber);
    hfamily->add_option("--n-max", h_max)->check(CLI::PositiveNumber);
    hfamily->add_option("--k", h_k, "pendant paths: an integer or n");
    hfamily->add_option("--t", h_t, "path length: an integer or n");
    hfamily->add_option("--out", h_out, "output directory");
    hfamily->add_flag("--svg", h_svg, "also write hfamily.svg");
    hfamily->add_option("--residual", h_residual)->check(CLI::PositiveNumber);

    int s_max = 30;
    auto* trend = app.add_subcommand("stirling-trend", "least root of the edgeless-graph sigma-polynomial");
    trend->add_option("--n-max", s_max)->check(CLI::Range(2, 40));

    int m_trials = 200, m_max = 8;
    std::uint64_t m_seed = 1;
    double m_tol = 1e-9;
    auto* mono = app.add_subcommand("monotonicity", "edge deletion never moves the least sigma-root right");
    mono->add_option("--trials", m_trials)->check(CLI::NonNegativeNumber);
    mono->add_option("--n-max", m_max)->check(CLI::Range(2, 8));
    mono->add_option("--seed", m_seed);
    mono->add_option("--tolerance", m_tol)->check(CLI::PositiveNumber);

    IdentityConfig id_cfg;
    auto* identities = app.add_subcommand("identities", "triangle-free, forest and join identities");
    identities->add_option("--triangle-free-max", id_cfg.triangle_free_max)->check(CLI::Range(1, 7));
    identities->add_option("--tree-max", id_cfg.tree_max)->check(CLI::Range(1, 12));
    identities->add_option("--join-max", id_cfg.join_max)->check(CLI::Range(1, 5));

    int l_n = 1, l_workers = 1;
    double l_step = 0.01, l_tol = default_equimodular_tolerance, l_im = 1.0;
    std::string l_out;
    auto* limits = app.add_subcommand("limits", "equimodular scan of the constant-branching tree recursion");
    limits->add_option("--n", l_n, "branching number")->check(CLI::Range(1, 1000));
    limits->add_option("--step", l_step, "grid step")->check(CLI::PositiveNumber);
    limits->add_option("--tolerance", l_tol)->check(CLI::PositiveNumber);
    limits->add_option("--im-extent", l_im, "scan Im in [-e, e]")->check(CLI::NonNegativeNumber);
    limits->add_option("--out", l_out, "write the sample CSV here");
    limits->add_option("--workers", l_workers)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*survey) return run_survey_command(survey_opt, "");
        if (*figure1) {
            if (!figure_opt.input.empty()) figure_opt.builtin_order = 0;
            return run_survey_command(figure_opt, "figure1.svg");
        }
        if (*hfamily) {
            if (h_max < h_min) throw InputError("--n-max must be at least --n-min");
            auto results = h_family_roots(h_min, h_max, HFamilyParam::parse(h_k), HFamilyParam::parse(h_t),
                                          h_residual);
            fs::create_directories(h_out);
            write_file(fs::path(h_out) / "hfamily_roots.csv", h_family_roots_csv(results));
            write_file(fs::path(h_out) / "hfamily_summary.csv", h_family_summary_csv(results));
            if (h_svg) {
                std::vector<RootPoint> points;
                for (const auto& r : results)
                    for (const auto& root : r.nonreal_roots) points.push_back({root.value.real(), root.value.imag()});
                write_file(fs::path(h_out) / "hfamily.svg", roots_svg(points));
            }
            std::cout << h_family_summary_csv(results);
            return exit_ok;
        }
        if (*trend) {
            auto rows = stirling_trend_report(s_max);
            std::cout << stirling_trend_csv(rows);
            for (const auto& r : rows)
                if (!r.all_real) return exit_violation;
            return exit_ok;
        }
        if (*mono) {
            auto report = monotonicity_suite(m_trials, m_max, m_seed, m_tol);
            std::cout << "trials: " << report.trials << "\nchecked: " << report.checked
                      << "\nskipped: " << report.skipped << "\nviolations: " << report.violations << '\n';
            for (const auto& c : report.counterexamples) std::cout << "counterexample: " << c << '\n';
            return report.violations ? exit_violation : exit_ok;
        }
        if (*identities) {
            bool failed = false;
            print_identities(identity_suite(id_cfg), failed);
            return failed ? exit_violation : exit_ok;
        }
        if (*limits) {
            const auto interval = analytic_limit_interval(l_n);
            const double reach = interval.endpoint() + 1.0;
            auto sample = equimodular_scan(constant_branching_recursion(l_n), {-reach, reach, -l_im, l_im}, l_step,
                                           l_tol, l_workers);
            double lo = INFINITY, hi = -INFINITY, off_axis = 0;
            for (const auto& p : sample.points) {
                if (p.flag != LimitFlag::equimodular) continue;
                if (p.x.imag() == 0) {
                    lo = std::min(lo, p.x.real());
                    hi = std::max(hi, p.x.real());
                } else {
                    off_axis = std::max(off_axis, std::abs(p.x.imag()));
                }
            }
            if (!l_out.empty()) write_file(l_out, limit_sample_csv(sample));
            std::cout << "analytic: " << interval.to_string() << "\nflagged_real_min: " << format_decimal(lo)
                      << "\nflagged_real_max: " << format_decimal(hi)
                      << "\nmax_flagged_abs_im: " << format_decimal(off_axis) << '\n';
            return exit_ok;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const capacity_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_violation;
    }
    return exit_ok;
}
