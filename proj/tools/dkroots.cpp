#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dk/bounds.hpp"
#include "dk/experiments.hpp"
#include "dk/format.hpp"
#include "dk/metrics.hpp"
#include "dk/poly.hpp"
#include "dk/solver.hpp"
#include "dk/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("DK_SEED")) {
        std::uint64_t v = 0;
        const std::string s(env);
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc() || res.ptr != s.data() + s.size())
            throw UsageError("invalid DK_SEED value: '" + s + "'");
        return v;
    }
    return 42;
}

dk::RealPolynomial load_polynomial(const std::string& coeffs, const std::string& file) {
    if (!coeffs.empty() && !file.empty())
        throw UsageError("use either --coeffs or --file, not both");
    try {
        if (!coeffs.empty()) return dk::parse_coefficient_line(coeffs);
        if (!file.empty()) return dk::read_polynomial_file(file);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    throw UsageError("a polynomial is required (--coeffs or --file)");
}

dk::BoundMethod parse_bound(const std::string& name) {
    if (auto m = dk::bound_method_from_string(name)) return *m;
    throw UsageError("unknown bound '" + name +
                     "' (expected cauchy, lagrange, aberth, new-bound-1 or lambda-max)");
}

std::pair<double, double> parse_range(const std::string& text, const char* flag) {
    const auto colon = text.find(':');
    double lo = 0.0, hi = 0.0;
    if (colon == std::string::npos || !dk::parse_double(text.substr(0, colon), lo) ||
        !dk::parse_double(text.substr(colon + 1), hi) || !(lo <= hi))
        throw UsageError(std::string("bad ") + flag + " value '" + text + "', expected LO:HI");
    return {lo, hi};
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
    std::vector<int> out;
    for (const std::string& tok : dk::split_csv_line(text)) {
        double v = 0.0;
        if (!dk::parse_double(tok, v) || v < 1 || v != static_cast<int>(v))
            throw UsageError(std::string("bad ") + flag + " entry '" + tok + "'");
        out.push_back(static_cast<int>(v));
    }
    if (out.empty()) throw UsageError(std::string(flag) + " must be non-empty");
    return out;
}

int cmd_solve(const std::string& coeffs, const std::string& file, const std::string& bound,
              double eps1, double eps2, int max_iter, std::optional<std::uint64_t> seed,
              bool no_scaling, bool record_history, const std::string& history_csv) {
    const dk::RealPolynomial p = load_polynomial(coeffs, file);
    const dk::BoundMethod method = parse_bound(bound);

    dk::SolverConfig cfg;
    cfg.eps1 = eps1;
    cfg.eps2 = eps2;
    cfg.max_iter = max_iter;
    cfg.record_history = record_history || !history_csv.empty();
    if (no_scaling) cfg.enable_scaling = false;

    dk::PowerIterConfig power;
    power.seed = seed ? *seed : default_seed();

    dk::SolveOutcome out;
    try {
        out = dk::solve(p, method, cfg, power);
    } catch (const std::exception& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return kExitNumerical;
    }

    nlohmann::ordered_json j;
    j["status"] = dk::to_string(out.status);
    j["iterations"] = out.iterations_used;
    j["radius"] = out.radius_used;
    j["bound"] = dk::to_string(out.bound_method);
    j["roots"] = nlohmann::ordered_json::array();
    for (const auto& z : out.roots)
        j["roots"].push_back({{"re", z.real()}, {"im", z.imag()}});
    j["max_residual"] = out.max_residual;
    if (record_history) j["history"] = out.history;
    std::cout << j.dump(2) << '\n';

    if (!history_csv.empty()) {
        std::ofstream hist(history_csv);
        if (!hist) throw UsageError("cannot open " + history_csv + " for writing");
        hist << "run,iteration,max_step\n";
        for (std::size_t i = 0; i < out.history.size(); ++i)
            hist << dk::to_string(method) << ',' << (i + 1) << ','
                 << dk::format_double(out.history[i]) << '\n';
    }
    return kExitOk;
}

int cmd_bounds(const std::string& coeffs, const std::string& file,
               std::optional<std::uint64_t> seed, bool as_json) {
    const dk::RealPolynomial p = load_polynomial(coeffs, file);
    dk::PowerIterConfig power;
    power.seed = seed ? *seed : default_seed();

    std::vector<dk::BoundResult> results;
    for (dk::BoundMethod m : dk::kAllBoundMethods) {
        try {
            results.push_back(dk::radius(p, m, power));
        } catch (const std::exception& e) {
            std::cerr << "bound error: " << e.what() << '\n';
            return kExitNumerical;
        }
    }
    if (as_json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : results) {
            nlohmann::ordered_json j;
            j["method"] = dk::to_string(r.method);
            j["radius"] = r.radius;
            if (r.detail.r0) j["r0"] = *r.detail.r0;
            if (r.detail.power_iters) j["power_iters"] = *r.detail.power_iters;
            j["fallback"] = r.detail.fallback;
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump(2) << '\n';
        return kExitOk;
    }
    std::cout << "method,radius,r0,power_iters,fallback\n";
    for (const auto& r : results) {
        std::cout << dk::to_string(r.method) << ',' << dk::format_double17(r.radius) << ',';
        if (r.detail.r0) std::cout << dk::format_double(*r.detail.r0);
        std::cout << ',';
        if (r.detail.power_iters) std::cout << *r.detail.power_iters;
        std::cout << ',' << (r.detail.fallback ? "true" : "false") << '\n';
    }
    return kExitOk;
}

int cmd_experiment(const std::string& scenario, std::optional<std::uint64_t> seed_opt,
                   const std::string& out_path, int count, const std::string& deg_range,
                   const std::string& coeff_range, const std::string& n_list, double spacing,
                   double perturb, int perturb_power) {
    const std::uint64_t seed = seed_opt ? *seed_opt : default_seed();
    const std::vector<dk::BoundMethod> all(std::begin(dk::kAllBoundMethods),
                                           std::end(dk::kAllBoundMethods));
    dk::SolverConfig cfg;

    std::vector<dk::ExperimentRecord> records;
    if (scenario == "radius-comparison") {
        const auto [dlo, dhi] = parse_range(deg_range, "--deg-range");
        const auto cr = parse_range(coeff_range, "--coeff-range");
        records = dk::run_radius_comparison(count, static_cast<int>(dlo),
                                            static_cast<int>(dhi), cr, seed);
    } else if (scenario == "wilkinson") {
        records = dk::run_wilkinson_suite(parse_int_list(n_list, "--n-list"), all, cfg);
    } else if (scenario == "wilkinson-perturbed") {
        for (int n : parse_int_list(n_list, "--n-list")) {
            const int k = perturb_power >= 0 ? perturb_power : n - 1;
            for (dk::BoundMethod m : all)
                records.push_back(dk::run_perturbed_wilkinson(n, perturb, k, m, cfg));
        }
    } else if (scenario == "clustered") {
        records = dk::run_clustered_suite(parse_int_list(n_list, "--n-list"), spacing, all, cfg);
    } else if (scenario == "random") {
        const auto cr = parse_range(coeff_range, "--coeff-range");
        records = dk::run_random_suite(parse_int_list(n_list, "--n-list"), cr, all, cfg, seed);
    } else {
        throw UsageError("unknown scenario '" + scenario +
                         "' (expected radius-comparison, wilkinson, wilkinson-perturbed, "
                         "clustered or random)");
    }

    if (out_path.empty() || out_path == "-") {
        dk::write_records_csv(std::cout, records);
    } else {
        std::ofstream out(out_path);
        if (!out) throw UsageError("cannot open " + out_path + " for writing");
        dk::write_records_csv(out, records);
    }

    int solves = 0, converged = 0;
    for (const auto& r : records) {
        if (r.status == "BoundsOnly") continue;
        ++solves;
        if (r.status.rfind("Converged", 0) == 0) ++converged;
    }
    std::cerr << "records=" << records.size() << " converged=" << converged << '/' << solves;
    if (solves > 0) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), " (%.1f%%)", 100.0 * converged / solves);
        std::cerr << buf;
    }
    std::cerr << '\n';
    return kExitOk;
}

int cmd_plot(const std::string& in_path, const std::string& kind, const std::string& out_path) {
    std::ifstream in(in_path);
    if (!in) throw UsageError("cannot open " + in_path);
    const dk::CsvTable table = dk::read_csv(in);

    std::string svg;
    try {
        if (kind == "radius") svg = dk::radius_chart_svg(table);
        else if (kind == "convergence") svg = dk::convergence_chart_svg(table);
        else throw UsageError("unknown plot kind '" + kind + "' (expected radius or convergence)");
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot open " + out_path + " for writing");
    out << svg;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Durand-Kerner polynomial root finder and initial-bound benchmark"};
    app.require_subcommand(1);

    std::string coeffs, file, bound, history_csv;
    double eps1 = 1e-12, eps2 = 1e-10;
    int max_iter = 1000;
    std::uint64_t seed_value = 0;
    bool no_scaling = false, record_history = false;

    auto* solve = app.add_subcommand("solve", "solve one polynomial, JSON to stdout");
    solve->add_option("--coeffs", coeffs, "comma-separated coefficients, descending powers");
    solve->add_option("--file", file, "polynomial file; first data line is used");
    solve->add_option("--bound", bound, "initial-radius strategy")->required();
    solve->add_option("--eps1", eps1, "step tolerance");
    solve->add_option("--eps2", eps2, "residual tolerance");
    solve->add_option("--max-iter", max_iter, "iteration cap");
    auto* solve_seed = solve->add_option("--seed", seed_value, "power-iteration seed");
    solve->add_flag("--no-scaling", no_scaling, "disable the variable-scaling safeguard");
    solve->add_flag("--record-history", record_history, "include per-iteration max steps in JSON");
    solve->add_option("--history-csv", history_csv,
                      "also write the step history as run,iteration,max_step CSV");

    bool bounds_json = false;
    auto* bounds = app.add_subcommand("bounds", "all five radii for one polynomial, CSV to stdout");
    bounds->add_option("--coeffs", coeffs, "comma-separated coefficients, descending powers");
    bounds->add_option("--file", file, "polynomial file; first data line is used");
    auto* bounds_seed = bounds->add_option("--seed", seed_value, "power-iteration seed");
    bounds->add_flag("--json", bounds_json, "emit JSON instead of CSV");

    std::string scenario, out_path, deg_range = "3:50", coeff_range = "-15:15";
    std::string n_list = "5,10,15,20";
    int count = 50, perturb_power = -1;
    double spacing = 0.001, perturb = 0x1.0p-23;

    auto* exp = app.add_subcommand("experiment", "run a study, CSV records to --out");
    exp->add_option("--scenario", scenario, "radius-comparison | wilkinson | "
                                            "wilkinson-perturbed | clustered | random")
        ->required();
    auto* exp_seed = exp->add_option("--seed", seed_value, "master seed");
    exp->add_option("--out", out_path, "output CSV path ('-' for stdout)");
    exp->add_option("--count", count, "number of polynomials (radius-comparison)");
    exp->add_option("--deg-range", deg_range, "degree range LO:HI");
    exp->add_option("--coeff-range", coeff_range, "coefficient range LO:HI");
    exp->add_option("--n-list", n_list, "comma-separated degrees");
    exp->add_option("--spacing", spacing, "clustered root spacing");
    exp->add_option("--perturb", perturb, "perturbation subtracted from one coefficient");
    exp->add_option("--perturb-power", perturb_power, "power k of the perturbed term");

    std::string plot_in, plot_kind, plot_out;
    auto* plot = app.add_subcommand("plot", "render an SVG chart from CSV");
    plot->add_option("--in", plot_in, "input CSV")->required();
    plot->add_option("--kind", plot_kind, "radius | convergence")->required();
    plot->add_option("--out", plot_out, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    try {
        const auto seed = [&](CLI::Option* opt) -> std::optional<std::uint64_t> {
            return opt->count() ? std::optional<std::uint64_t>(seed_value) : std::nullopt;
        };
        if (solve->parsed())
            return cmd_solve(coeffs, file, bound, eps1, eps2, max_iter, seed(solve_seed),
                             no_scaling, record_history, history_csv);
        if (bounds->parsed()) return cmd_bounds(coeffs, file, seed(bounds_seed), bounds_json);
        if (exp->parsed())
            return cmd_experiment(scenario, seed(exp_seed), out_path, count, deg_range,
                                  coeff_range, n_list, spacing, perturb, perturb_power);
        if (plot->parsed()) return cmd_plot(plot_in, plot_kind, plot_out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitUsage;
}
