#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dk/poly.hpp"

namespace dk {

/// The five initial-radius strategies.
enum class BoundMethod { Cauchy, Lagrange, Aberth, NewBound1, LambdaMax };

inline constexpr BoundMethod kAllBoundMethods[] = {
    BoundMethod::Cauchy, BoundMethod::Lagrange, BoundMethod::Aberth,
    BoundMethod::NewBound1, BoundMethod::LambdaMax};

std::string to_string(BoundMethod m);
std::optional<BoundMethod> bound_method_from_string(const std::string& name);

struct BoundDetail {
    std::optional<double> r0;           // Aberth integer search result
    std::optional<int> power_iters;     // power-method iterations used
    bool fallback = false;              // Aberth search failed, Cauchy used
    bool tolerance_met = true;          // power-method relative tolerance met
};

struct BoundResult {
    BoundMethod method;
    double radius = 0.0;  // positive and finite
    BoundDetail detail;
};

/// Companion matrix of a monic polynomial: first row [-a_2, ..., -a_{n+1}],
/// ones on the subdiagonal, zero elsewhere. Eigenvalues are exactly the
/// roots of the polynomial.
struct CompanionMatrix {
    int order = 0;
    std::vector<double> first_row;
};

struct PowerIterConfig {
    int max_iters = 200;
    double rel_tol = 1e-8;
    std::uint64_t seed = 1;
    double safety_factor = 1.0;
};

/// Smallest radius reported by any method; keeps initial points distinct
/// even for p(x) = x^n whose every root is zero.
inline constexpr double kMinBoundRadius = 1e-6;

/// radius = 1 + max |a_i| over the non-leading coefficients.
BoundResult cauchy_bound(const RealPolynomial& p);

/// radius = 1 + max |a_k|^(1/(k-1)), k = 2..n+1.
BoundResult lagrange_bound(const RealPolynomial& p);

/// Coefficients of q(w) = p(w + c) by repeated synthetic division.
RealPolynomial shift_polynomial(const RealPolynomial& p, double c);

/// radius = |a_2|/n + r0, where r0 is the smallest nonnegative integer
/// making s(r0) > 0 for the sign-flipped shifted polynomial s. Falls back
/// to the Cauchy bound (flagged in detail) if the integer search fails.
BoundResult aberth_bound(const RealPolynomial& p);

/// radius = sum |a_k|^(1/(k-1)), k = 2..n+1. A zero tail yields
/// zero_tail_radius instead.
BoundResult new_bound1(const RealPolynomial& p, double zero_tail_radius = 1.0);

CompanionMatrix companion_matrix(const RealPolynomial& p);

/// y = C x exploiting the companion structure; out.size() == order.
void apply_companion(const CompanionMatrix& C, const std::vector<double>& x,
                     std::vector<double>& out);

/// Estimate of the largest eigenvalue modulus by normalized power iteration.
/// The per-step estimate is the geometric mean of the last two norm-growth
/// ratios (so a dominant complex-conjugate pair with ratio oscillation of
/// period two is still handled); when the relative tolerance is not reached
/// within max_iters the returned value is the telescoped growth rate over
/// the trailing half of the run, which stays accurate under the slower
/// rotation-modulated oscillation a general conjugate pair produces.
/// detail_out (optional) receives iterations used and whether the tolerance
/// was met.
double dominant_modulus(const CompanionMatrix& C, const PowerIterConfig& cfg,
                        BoundDetail* detail_out = nullptr);

/// radius = dominant_modulus(companion_matrix(p)) * cfg.safety_factor,
/// clamped below by kMinBoundRadius.
BoundResult lambda_max_bound(const RealPolynomial& p, const PowerIterConfig& cfg);

/// Dispatcher over the five methods. Clamps every radius to kMinBoundRadius.
BoundResult radius(const RealPolynomial& p, BoundMethod method,
                   const PowerIterConfig& cfg);

}  // namespace dk
