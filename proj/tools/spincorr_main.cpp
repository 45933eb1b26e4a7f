// Command-line front end: time sweeps, figure presets and the verification
// suite runner. Exit codes: 0 success, 1 verification failure, 2 usage error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "spincorr/spin.hpp"
#include "spincorr/sweep.hpp"
#include "spincorr/verify.hpp"
#include "spincorr/version.hpp"

namespace {

struct SweepArgs {
    std::string s1;
    std::string s2;
    double tj_max = 10.0;
    int steps = 201;
    std::string measures = "I,Jc,Jgg,Qgg,Cg,Qg,fid";
    std::string units = "B";
    std::optional<double> beta;
    std::string out = "-";
    std::string format = "csv";
};

struct FigureArgs {
    int id = 1;
    std::optional<double> tj_max;
    std::optional<int> steps;
    std::string out = "-";
    std::string format = "csv";
};

struct VerifyArgs {
    std::string suite = "all";
    std::optional<double> tol;
    int n_theta = 64;
    int n_phi = 128;
};

template <typename WriteFn>
void write_output(const std::string& path, WriteFn&& write) {
    if (path == "-" || path.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
    write(out);
}

int run_sweep_command(const SweepArgs& args) {
    spincorr::sweep::SweepConfig cfg;
    cfg.pair = spincorr::PairConfig(spincorr::SpinNumber::parse(args.s1),
                                    spincorr::SpinNumber::parse(args.s2));
    cfg.tj_max = args.tj_max;
    cfg.steps = args.steps;
    cfg.measures = spincorr::sweep::parse_measure_list(args.measures);
    cfg.unit_mode = spincorr::sweep::parse_unit_mode(args.units);
    cfg.beta = args.beta;
    const spincorr::sweep::MeasureSeries series = spincorr::sweep::run_sweep(cfg);
    if (args.format == "csv") {
        write_output(args.out, [&](std::ostream& os) { spincorr::sweep::write_csv(series, os); });
    } else if (args.format == "json") {
        write_output(args.out,
                     [&](std::ostream& os) { spincorr::sweep::write_json(cfg, series, os); });
    } else {
        throw std::invalid_argument("format must be csv or json");
    }
    return 0;
}

int run_figure_command(const FigureArgs& args) {
    spincorr::sweep::FigureOverrides ov;
    ov.tj_max = args.tj_max;
    ov.steps = args.steps;
    const auto blocks = spincorr::sweep::run_figure(args.id, ov);
    if (args.format == "csv") {
        write_output(args.out, [&](std::ostream& os) { spincorr::sweep::write_csv(blocks, os); });
    } else if (args.format == "json") {
        write_output(args.out,
                     [&](std::ostream& os) { spincorr::sweep::write_json(args.id, blocks, os); });
    } else {
        throw std::invalid_argument("format must be csv or json");
    }
    return 0;
}

int run_verify_command(const VerifyArgs& args) {
    spincorr::verify::Options opt;
    opt.suite = args.suite;
    opt.tol_override = args.tol;
    opt.n_theta = args.n_theta;
    opt.n_phi = args.n_phi;
    const auto checks = spincorr::verify::run_checks(opt);
    int failed = 0;
    for (const auto& c : checks) {
        std::printf("[%s] %-34s (%s) max_dev=%.3e tol=%.3e\n", c.pass ? "PASS" : "FAIL",
                    c.name.c_str(), c.suite.c_str(), c.max_deviation, c.tolerance);
        if (!c.pass) ++failed;
    }
    std::printf("verify: %zu checks, %d failed\n", checks.size(), failed);
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spincorr: correlation dynamics of two coupled large spins"};
    app.set_version_flag("--version", spincorr::kVersion);
    app.require_subcommand(1);

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "Evaluate measures on a uniform tJ grid");
    sweep->add_option("--s1", sweep_args.s1, "First spin (e.g. 1/2, 1.5)")->required();
    sweep->add_option("--s2", sweep_args.s2, "Second spin, S2 >= S1")->required();
    sweep->add_option("--tj-max", sweep_args.tj_max, "Upper end of the tJ grid");
    sweep->add_option("--steps", sweep_args.steps, "Number of grid rows (>= 2)");
    sweep->add_option("--measures", sweep_args.measures,
                      "Comma list from I,Jc,Jgg,Qgg,Cg,Qg,Co,Qo,fid");
    sweep->add_option("--units", sweep_args.units, "B, bits or figure");
    sweep->add_option("--beta", sweep_args.beta, "Polarization beta (required for bits)");
    sweep->add_option("--out", sweep_args.out, "Output path ('-' for stdout)");
    sweep->add_option("--format", sweep_args.format, "csv or json");

    FigureArgs figure_args;
    CLI::App* figure = app.add_subcommand("figure", "Emit the data behind a figure preset");
    figure->add_option("id", figure_args.id, "Figure id (1, 2 or 3)")->required();
    figure->add_option("--tj-max", figure_args.tj_max, "Override the preset tJ range");
    figure->add_option("--steps", figure_args.steps, "Override the preset grid size");
    figure->add_option("--out", figure_args.out, "Output path ('-' for stdout)");
    figure->add_option("--format", figure_args.format, "csv or json");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("--suite", verify_args.suite, "analytic, oracle or all");
    verify->add_option("--tol", verify_args.tol, "Override every check tolerance");
    verify->add_option("--n-theta", verify_args.n_theta, "Gauss-Legendre order per sphere");
    verify->add_option("--n-phi", verify_args.n_phi, "Azimuthal nodes per sphere");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sweep->parsed()) return run_sweep_command(sweep_args);
        if (figure->parsed()) return run_figure_command(figure_args);
        if (verify->parsed()) return run_verify_command(verify_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
