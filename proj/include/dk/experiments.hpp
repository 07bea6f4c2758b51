#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dk/bounds.hpp"
#include "dk/poly.hpp"
#include "dk/solver.hpp"

namespace dk {

/// One (polynomial, bound) outcome. mean_error is -1 when no ground truth
/// exists (random-coefficient scenario and bounds-only records).
struct ExperimentRecord {
    std::string scenario;
    int degree = 0;
    std::string bound;
    double radius = 0.0;
    int iterations = 0;
    std::string status;
    double mean_error = -1.0;
    double max_residual = 0.0;
    std::uint64_t seed = 0;
    double wall_time_ms = 0.0;
};

/// Computes all five bounds for `count` random polynomials with degrees
/// drawn uniformly from [deg_lo, deg_hi] and coefficients from coeff_range.
/// No solves: iterations stay 0 and status is "BoundsOnly".
std::vector<ExperimentRecord> run_radius_comparison(int count, int deg_lo, int deg_hi,
                                                    std::pair<double, double> coeff_range,
                                                    std::uint64_t seed);

/// Solves wilkinson(n) for each n and bound; errors are measured against
/// the construction roots -1..-n. Solver failures become status "Error".
std::vector<ExperimentRecord> run_wilkinson_suite(const std::vector<int>& n_values,
                                                  const std::vector<BoundMethod>& bounds,
                                                  const SolverConfig& cfg);

/// Solves the perturbed Wilkinson polynomial; the error column compares
/// against the unperturbed roots.
ExperimentRecord run_perturbed_wilkinson(int n, double eps, int k, BoundMethod bound,
                                         const SolverConfig& cfg);

std::vector<ExperimentRecord> run_clustered_suite(const std::vector<int>& n_values,
                                                  double spacing,
                                                  const std::vector<BoundMethod>& bounds,
                                                  const SolverConfig& cfg);

/// Random-coefficient polynomials have no closed-form truth: mean_error is
/// the -1 sentinel and accuracy is the scaled-frame max residual.
std::vector<ExperimentRecord> run_random_suite(const std::vector<int>& n_values,
                                               std::pair<double, double> coeff_range,
                                               const std::vector<BoundMethod>& bounds,
                                               const SolverConfig& cfg, std::uint64_t seed);

inline constexpr char kRecordCsvHeader[] =
    "scenario,degree,bound,radius,iterations,status,mean_error,max_residual,seed,wall_time_ms";

void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);

}  // namespace dk
