#include "dk/solver.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "dk/extended_precision.hpp"
#include "dk/rng.hpp"

namespace dk {

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::ConvergedByStep: return "ConvergedByStep";
        case SolveStatus::ConvergedByResidual: return "ConvergedByResidual";
        case SolveStatus::MaxIterations: return "MaxIterations";
    }
    return "unknown";
}

RootSet initial_points(int n, double r, double angle_offset) {
    if (n < 1) throw std::invalid_argument("need at least one point");
    if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
    RootSet xs(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / n + angle_offset;
        xs[static_cast<std::size_t>(k)] = Complex(r * std::cos(theta), r * std::sin(theta));
    }
    return xs;
}

namespace {

bool finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

std::vector<Complex> eval_all(const RealPolynomial& p, const RootSet& xs) {
    std::vector<Complex> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        out[i] = detail::eval_horner_accurate(p.coeffs(), xs[i]);
    return out;
}

struct StepResult {
    RootSet next;
    double max_step = 0.0;
    int bad_index = -1;  // collision or non-finite denominator, -1 if none
};

// One Jacobi sweep given the evaluations at the current iterates.
StepResult jacobi_step(const RootSet& xs, const std::vector<Complex>& evals) {
    const std::size_t n = xs.size();
    StepResult r;
    r.next.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex den(1.0, 0.0);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) den *= xs[i] - xs[j];
        if (den == Complex(0.0, 0.0) || !finite(den)) {
            r.bad_index = static_cast<int>(i);
            return r;
        }
        const Complex w = evals[i] / den;
        r.next[i] = xs[i] - w;
        r.max_step = std::max(r.max_step, std::abs(w));
    }
    return r;
}

Complex unit_direction(std::uint64_t a, std::uint64_t b) {
    const double u = static_cast<double>(mix_seed(a * 0x100000001b3ULL + b) >> 11) * 0x1.0p-53;
    const double theta = 2.0 * std::numbers::pi * u;
    return {std::cos(theta), std::sin(theta)};
}

}  // namespace

std::pair<RootSet, double> dk_step(const RealPolynomial& p, const RootSet& xs) {
    if (static_cast<int>(xs.size()) != p.degree())
        throw std::invalid_argument("iterate count must equal the degree");
    StepResult r = jacobi_step(xs, eval_all(p, xs));
    if (r.bad_index >= 0) throw CollisionError(r.bad_index);
    return {std::move(r.next), r.max_step};
}

SolveOutcome solve(const RealPolynomial& p, BoundMethod method,
                   const SolverConfig& cfg, const PowerIterConfig& power_cfg) {
    if (!(cfg.eps1 > 0.0) || !(cfg.eps2 > 0.0) || cfg.max_iter < 1 ||
        !(cfg.collision_delta > 0.0) || !(cfg.collision_delta < 1e-6))
        throw std::invalid_argument("invalid solver config");

    const int n = p.degree();
    const BoundResult bound = radius(p, method, power_cfg);
    const bool scaling = cfg.enable_scaling.value_or(n > 60);
    const double scale = scaling ? bound.radius : 1.0;
    const RealPolynomial work = scaling ? scale_variable(p, scale) : p;
    const double r_work = scaling ? 1.0 : bound.radius;

    RootSet xs = initial_points(n, r_work, cfg.angle_offset);
    std::vector<Complex> evals = eval_all(work, xs);

    // A residual below eps2 only counts as convergence when it is also
    // indistinguishable from zero at working precision. A monic polynomial
    // of high degree is exponentially small on much of the unit disk, so an
    // absolute threshold alone would stop far from any root; the classical
    // Horner noise ceiling eps * n * sum |a_k| |y|^(n-k) restores meaning.
    std::vector<double> abs_coeffs(work.coeffs().size());
    for (std::size_t k = 0; k < abs_coeffs.size(); ++k)
        abs_coeffs[k] = std::abs(work.coeffs()[k]);
    const double noise_factor =
        4.0 * (n + 4) * std::numeric_limits<double>::epsilon();
    const auto residual_is_noise_level = [&](const RootSet& pts,
                                             const std::vector<Complex>& vals) {
        for (std::size_t i = 0; i < pts.size(); ++i) {
            double ceil_i = abs_coeffs[0];
            const double m = std::abs(pts[i]);
            for (std::size_t k = 1; k < abs_coeffs.size(); ++k)
                ceil_i = ceil_i * m + abs_coeffs[k];
            if (std::abs(vals[i]) > noise_factor * ceil_i) return false;
        }
        return true;
    };

    SolveOutcome out;
    out.bound_method = method;
    out.radius_used = bound.radius;
    out.status = SolveStatus::MaxIterations;
    if (cfg.record_history) out.history.reserve(static_cast<std::size_t>(cfg.max_iter));

    int iter = 0;
    while (iter < cfg.max_iter) {
        ++iter;
        StepResult step = jacobi_step(xs, evals);
        int retries = 0;
        while (step.bad_index >= 0) {
            if (++retries > 8 * n) throw DivergenceError();
            const std::size_t b = static_cast<std::size_t>(step.bad_index);
            xs[b] += cfg.collision_delta * r_work *
                     unit_direction(static_cast<std::uint64_t>(iter), b);
            evals[b] = detail::eval_horner_accurate(work.coeffs(), xs[b]);
            step = jacobi_step(xs, evals);
        }

        // A non-finite iterate gets one perturbation retry of its source
        // point; a second non-finite result is a divergence.
        bool retried_nonfinite = false;
        for (std::size_t i = 0; i < step.next.size(); ++i) {
            if (finite(step.next[i])) continue;
            if (retried_nonfinite) throw DivergenceError();
            retried_nonfinite = true;
            xs[i] += cfg.collision_delta * r_work *
                     unit_direction(static_cast<std::uint64_t>(iter) | 0x8000000000000000ULL, i);
            evals[i] = detail::eval_horner_accurate(work.coeffs(), xs[i]);
            StepResult again = jacobi_step(xs, evals);
            if (again.bad_index >= 0 || !finite(again.next[i])) throw DivergenceError();
            step = std::move(again);
            i = static_cast<std::size_t>(-1);  // recheck all entries
        }

        xs = std::move(step.next);
        evals = eval_all(work, xs);
        if (cfg.record_history) out.history.push_back(step.max_step);

        if (step.max_step < cfg.eps1) {
            out.status = SolveStatus::ConvergedByStep;
            break;
        }
        double resid = 0.0;
        for (const Complex& e : evals) resid = std::max(resid, std::abs(e));
        if (resid < cfg.eps2 && residual_is_noise_level(xs, evals)) {
            out.status = SolveStatus::ConvergedByResidual;
            break;
        }
    }

    out.iterations_used = iter;
    double resid = 0.0;
    for (const Complex& e : evals) resid = std::max(resid, std::abs(e));
    out.work_residual = resid;
    out.roots = std::move(xs);
    if (scaling) {
        for (Complex& z : out.roots) z *= scale;
        for (const Complex& z : out.roots)
            out.max_residual = std::max(
                out.max_residual, std::abs(detail::eval_horner_accurate(p.coeffs(), z)));
    } else {
        out.max_residual = resid;
    }
    if (!cfg.record_history) out.history.clear();
    return out;
}

}  // namespace dk
