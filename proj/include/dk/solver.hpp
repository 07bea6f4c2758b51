#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dk/bounds.hpp"
#include "dk/poly.hpp"

namespace dk {

struct SolverConfig {
    double eps1 = 1e-12;          // step tolerance
    double eps2 = 1e-10;          // residual tolerance
    int max_iter = 1000;
    double angle_offset = 0.4;    // initial-circle rotation, radians
    double collision_delta = 1e-9;
    // unset: scaling switches on automatically for degree > 60
    std::optional<bool> enable_scaling;
    bool record_history = false;
};

enum class SolveStatus { ConvergedByStep, ConvergedByResidual, MaxIterations };

std::string to_string(SolveStatus s);

struct SolveOutcome {
    RootSet roots;
    int iterations_used = 0;
    SolveStatus status = SolveStatus::MaxIterations;
    double radius_used = 0.0;
    BoundMethod bound_method = BoundMethod::Cauchy;
    // max_i |p(root_i)| of the input polynomial
    double max_residual = 0.0;
    // same quantity in the frame the iteration ran in; differs from
    // max_residual only when the variable scaling was active
    double work_residual = 0.0;
    std::vector<double> history;  // per-iteration max step, when recorded
};

/// Two iterates collided (zero or non-finite Weierstrass denominator).
struct CollisionError : std::runtime_error {
    explicit CollisionError(int i)
        : std::runtime_error("iterates collided at index " + std::to_string(i)),
          index(i) {}
    int index;
};

struct DivergenceError : std::runtime_error {
    DivergenceError() : std::runtime_error("divergence detected") {}
};

/// n points on the circle of radius r: x_k = r exp(i(2 pi (k-1)/n + offset)).
RootSet initial_points(int n, double r, double angle_offset);

/// One Jacobi-style Weierstrass update: every correction is computed from
/// the previous iterate. Returns the new iterates and max_i |x_i' - x_i|.
/// Throws CollisionError when a denominator product is zero or non-finite.
std::pair<RootSet, double> dk_step(const RealPolynomial& p, const RootSet& xs);

/// Full Durand-Kerner run: radius from the chosen bound, optional variable
/// scaling (roots are solved near the unit circle and rescaled), initial
/// points on the circle, Jacobi iteration with step/residual/max-iteration
/// stopping. The residual stop requires the residuals to be under eps2 in
/// the working frame and simultaneously at the evaluation noise floor, so
/// the exponentially small values a high-degree monic polynomial takes
/// inside the unit disk cannot end the run early. Collisions are perturbed
/// deterministically and iteration continues; an iterate that stays
/// non-finite after one perturbation retry raises DivergenceError.
SolveOutcome solve(const RealPolynomial& p, BoundMethod method,
                   const SolverConfig& cfg = {},
                   const PowerIterConfig& power_cfg = {});

}  // namespace dk
