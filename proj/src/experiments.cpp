#include "dk/experiments.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

#include "dk/format.hpp"
#include "dk/metrics.hpp"
#include "dk/rng.hpp"

namespace dk {

namespace {

// Experiment runs want estimator noise well below the quantities being
// compared, so they use a larger power-iteration budget than the
// PowerIterConfig defaults aimed at one-off calls.
PowerIterConfig experiment_power_cfg(std::uint64_t seed, std::uint64_t tag) {
    PowerIterConfig cfg;
    cfg.max_iters = 5000;
    cfg.rel_tol = 1e-10;
    cfg.seed = mix_seed(seed + tag);
    return cfg;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    const auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration<double, std::milli>(dt).count();
}

// Solve + match against optional truth, converting failures into an
// "Error" record instead of aborting the suite.
ExperimentRecord solve_record(const std::string& scenario, const RealPolynomial& p,
                              BoundMethod bound, const SolverConfig& cfg,
                              const RootSet* truth, std::uint64_t seed,
                              std::uint64_t power_tag) {
    ExperimentRecord rec;
    rec.scenario = scenario;
    rec.degree = p.degree();
    rec.bound = to_string(bound);
    rec.seed = seed;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const SolveOutcome out = solve(p, bound, cfg, experiment_power_cfg(seed, power_tag));
        rec.radius = out.radius_used;
        rec.iterations = out.iterations_used;
        rec.status = to_string(out.status);
        rec.max_residual = out.work_residual;
        if (truth != nullptr)
            rec.mean_error = match_roots(out.roots, *truth).mean_error;
    } catch (const std::exception&) {
        rec.status = "Error";
    }
    rec.wall_time_ms = elapsed_ms(t0);
    return rec;
}

}  // namespace

std::vector<ExperimentRecord> run_radius_comparison(int count, int deg_lo, int deg_hi,
                                                    std::pair<double, double> coeff_range,
                                                    std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("count must be at least 1");
    if (deg_lo < 3 || deg_lo > deg_hi) throw std::invalid_argument("bad degree range");

    std::vector<ExperimentRecord> records;
    records.reserve(static_cast<std::size_t>(count) * 5);
    Rng rng(seed);
    for (int i = 0; i < count; ++i) {
        const int deg = rng.uniform_int(deg_lo, deg_hi);
        std::vector<double> c(static_cast<std::size_t>(deg) + 1);
        c[0] = 1.0;
        for (std::size_t k = 1; k < c.size(); ++k)
            c[k] = rng.uniform(coeff_range.first, coeff_range.second);
        const RealPolynomial p{std::move(c)};
        for (BoundMethod m : kAllBoundMethods) {
            ExperimentRecord rec;
            rec.scenario = "radius-comparison";
            rec.degree = deg;
            rec.bound = to_string(m);
            rec.seed = seed;
            rec.status = "BoundsOnly";
            const auto t0 = std::chrono::steady_clock::now();
            rec.radius = radius(p, m, experiment_power_cfg(seed, static_cast<std::uint64_t>(i))).radius;
            rec.wall_time_ms = elapsed_ms(t0);
            records.push_back(std::move(rec));
        }
    }
    return records;
}

std::vector<ExperimentRecord> run_wilkinson_suite(const std::vector<int>& n_values,
                                                  const std::vector<BoundMethod>& bounds,
                                                  const SolverConfig& cfg) {
    std::vector<ExperimentRecord> records;
    records.reserve(n_values.size() * bounds.size());
    for (int n : n_values) {
        const RealPolynomial p = wilkinson(n);
        RootSet truth;
        for (int i = 1; i <= n; ++i) truth.emplace_back(-i, 0.0);
        for (BoundMethod m : bounds)
            records.push_back(solve_record("wilkinson", p, m, cfg, &truth, 0,
                                           static_cast<std::uint64_t>(n)));
    }
    return records;
}

ExperimentRecord run_perturbed_wilkinson(int n, double eps, int k, BoundMethod bound,
                                         const SolverConfig& cfg) {
    const RealPolynomial p = wilkinson_perturbed(n, eps, k);
    RootSet truth;
    for (int i = 1; i <= n; ++i) truth.emplace_back(-i, 0.0);
    const std::string scenario =
        "wilkinson-perturbed eps=" + format_double(eps) + " k=" + std::to_string(k);
    return solve_record(scenario, p, bound, cfg, &truth, 0, static_cast<std::uint64_t>(n));
}

std::vector<ExperimentRecord> run_clustered_suite(const std::vector<int>& n_values,
                                                  double spacing,
                                                  const std::vector<BoundMethod>& bounds,
                                                  const SolverConfig& cfg) {
    std::vector<ExperimentRecord> records;
    records.reserve(n_values.size() * bounds.size());
    const std::string scenario = "clustered spacing=" + format_double(spacing);
    for (int n : n_values) {
        const auto [p, truth] = clustered(n, spacing);
        for (BoundMethod m : bounds)
            records.push_back(solve_record(scenario, p, m, cfg, &truth, 0,
                                           static_cast<std::uint64_t>(n)));
    }
    return records;
}

std::vector<ExperimentRecord> run_random_suite(const std::vector<int>& n_values,
                                               std::pair<double, double> coeff_range,
                                               const std::vector<BoundMethod>& bounds,
                                               const SolverConfig& cfg, std::uint64_t seed) {
    std::vector<ExperimentRecord> records;
    records.reserve(n_values.size() * bounds.size());
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        const int n = n_values[i];
        const RealPolynomial p =
            random_poly(n, coeff_range.first, coeff_range.second, mix_seed(seed + i));
        for (BoundMethod m : bounds)
            records.push_back(solve_record("random", p, m, cfg, nullptr, seed,
                                           static_cast<std::uint64_t>(n)));
    }
    return records;
}

void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
    out << kRecordCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.scenario << ',' << r.degree << ',' << r.bound << ','
            << format_double(r.radius) << ',' << r.iterations << ',' << r.status << ','
            << format_double(r.mean_error) << ',' << format_double(r.max_residual) << ','
            << r.seed << ',' << format_double(r.wall_time_ms) << '\n';
    }
}

}  // namespace dk
