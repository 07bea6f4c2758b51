#include "dk/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dk/rng.hpp"

namespace dk {

std::string to_string(BoundMethod m) {
    switch (m) {
        case BoundMethod::Cauchy: return "cauchy";
        case BoundMethod::Lagrange: return "lagrange";
        case BoundMethod::Aberth: return "aberth";
        case BoundMethod::NewBound1: return "new-bound-1";
        case BoundMethod::LambdaMax: return "lambda-max";
    }
    return "unknown";
}

std::optional<BoundMethod> bound_method_from_string(const std::string& name) {
    for (BoundMethod m : kAllBoundMethods)
        if (to_string(m) == name) return m;
    return std::nullopt;
}

BoundResult cauchy_bound(const RealPolynomial& p) {
    const auto& c = p.coeffs();
    double m = 0.0;
    for (std::size_t k = 1; k < c.size(); ++k) m = std::max(m, std::abs(c[k]));
    return {BoundMethod::Cauchy, 1.0 + m, {}};
}

BoundResult lagrange_bound(const RealPolynomial& p) {
    const auto& c = p.coeffs();
    double m = 0.0;
    for (std::size_t k = 1; k < c.size(); ++k)
        m = std::max(m, std::pow(std::abs(c[k]), 1.0 / static_cast<double>(k)));
    return {BoundMethod::Lagrange, 1.0 + m, {}};
}

RealPolynomial shift_polynomial(const RealPolynomial& p, double c) {
    if (!std::isfinite(c)) throw std::invalid_argument("shift must be finite");
    std::vector<double> q = p.coeffs();
    const std::size_t n = q.size() - 1;
    // n passes of synthetic division by (w - c) accumulate the Taylor
    // coefficients of p at c, i.e. the coefficients of p(w + c).
    for (std::size_t pass = 0; pass < n; ++pass)
        for (std::size_t j = 1; j <= n - pass; ++j) q[j] += c * q[j - 1];
    return RealPolynomial(std::move(q));
}

namespace {

double eval_real(const std::vector<double>& c, double x) {
    double acc = c[0];
    for (std::size_t k = 1; k < c.size(); ++k) acc = acc * x + c[k];
    return acc;
}

}  // namespace

BoundResult aberth_bound(const RealPolynomial& p) {
    const auto& a = p.coeffs();
    const int n = p.degree();
    const double center = -a[1] / n;
    const RealPolynomial shifted = shift_polynomial(p, center);

    // s(w) keeps the leading term and turns every lower coefficient into
    // minus its absolute value.
    std::vector<double> s = shifted.coeffs();
    double max_abs = 0.0;
    for (std::size_t k = 1; k < s.size(); ++k) {
        max_abs = std::max(max_abs, std::abs(s[k]));
        s[k] = -std::abs(s[k]);
    }

    const double limit = std::ceil(std::max(max_abs, static_cast<double>(n))) + 1.0;
    for (double w = 0.0; w <= limit; w += 1.0) {
        if (eval_real(s, w) > 0.0) {
            BoundResult r{BoundMethod::Aberth, std::abs(a[1]) / n + w, {}};
            r.detail.r0 = w;
            return r;
        }
    }
    BoundResult r = cauchy_bound(p);
    r.method = BoundMethod::Aberth;
    r.detail.fallback = true;
    return r;
}

BoundResult new_bound1(const RealPolynomial& p, double zero_tail_radius) {
    const auto& c = p.coeffs();
    double sum = 0.0;
    bool any = false;
    for (std::size_t k = 1; k < c.size(); ++k) {
        if (c[k] != 0.0) any = true;
        sum += std::pow(std::abs(c[k]), 1.0 / static_cast<double>(k));
    }
    return {BoundMethod::NewBound1, any ? sum : zero_tail_radius, {}};
}

CompanionMatrix companion_matrix(const RealPolynomial& p) {
    const auto& a = p.coeffs();
    CompanionMatrix C;
    C.order = p.degree();
    C.first_row.resize(a.size() - 1);
    for (std::size_t k = 1; k < a.size(); ++k) C.first_row[k - 1] = -a[k];
    return C;
}

void apply_companion(const CompanionMatrix& C, const std::vector<double>& x,
                     std::vector<double>& out) {
    const std::size_t n = static_cast<std::size_t>(C.order);
    out.resize(n);
    double top = 0.0;
    for (std::size_t j = 0; j < n; ++j) top += C.first_row[j] * x[j];
    for (std::size_t i = n - 1; i >= 1; --i) out[i] = x[i - 1];
    out[0] = top;
}

namespace {

double norm2(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

void seeded_start(std::vector<double>& x, std::uint64_t seed) {
    Rng rng(seed);
    for (double& v : x) v = rng.uniform(-1.0, 1.0);
}

}  // namespace

double dominant_modulus(const CompanionMatrix& C, const PowerIterConfig& cfg,
                        BoundDetail* detail_out) {
    if (C.order < 1) throw std::invalid_argument("companion matrix is empty");
    if (cfg.max_iters < 2 || !(cfg.rel_tol > 0.0))
        throw std::invalid_argument("invalid power iteration config");

    const std::size_t n = static_cast<std::size_t>(C.order);
    if (std::all_of(C.first_row.begin(), C.first_row.end(),
                    [](double v) { return v == 0.0; })) {
        // Nilpotent shift matrix: every eigenvalue is zero.
        if (detail_out) {
            detail_out->power_iters = 0;
            detail_out->tolerance_met = true;
        }
        return 0.0;
    }

    std::vector<double> x(n), y(n);
    seeded_start(x, cfg.seed);
    double nx = norm2(x);
    if (nx == 0.0) {
        seeded_start(x, mix_seed(cfg.seed));
        nx = norm2(x);
        if (nx == 0.0) throw std::runtime_error("power iteration start vector is zero");
    }
    for (double& v : x) v /= nx;

    bool restarted = false;
    double prev_ratio = -1.0, prev_est = -1.0, est = 0.0;
    double log_growth = 0.0;
    std::vector<double> log_growth_prefix{0.0};
    int iters = 0;
    bool met = false;

    for (int k = 0; k < cfg.max_iters; ++k) {
        apply_companion(C, x, y);
        const double r = norm2(y);
        iters = k + 1;
        if (r == 0.0) {
            if (k == 0 && !restarted) {
                // Start vector happened to lie in the kernel; retry once.
                restarted = true;
                seeded_start(x, mix_seed(cfg.seed));
                const double nn = norm2(x);
                if (nn == 0.0) throw std::runtime_error("power iteration start vector is zero");
                for (double& v : x) v /= nn;
                --k;
                continue;
            }
            if (k == 0) throw std::runtime_error("power iteration start vector in kernel");
            // The Krylov sequence died out: dominant modulus is zero.
            est = 0.0;
            met = true;
            break;
        }
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / r;
        log_growth += std::log(r);
        log_growth_prefix.push_back(log_growth);
        if (prev_ratio >= 0.0) {
            est = std::sqrt(r * prev_ratio);
            if (prev_est >= 0.0 && std::abs(est - prev_est) < cfg.rel_tol * std::abs(est)) {
                met = true;
                break;
            }
            prev_est = est;
        }
        prev_ratio = r;
    }

    if (!met && log_growth_prefix.size() >= 3) {
        // Tolerance not reached: for a dominant conjugate pair the two-ratio
        // estimate keeps oscillating, but the average growth over a long
        // trailing window telescopes to |lambda_1|.
        const std::size_t k = log_growth_prefix.size() - 1;
        const std::size_t half = k / 2;
        est = std::exp((log_growth_prefix[k] - log_growth_prefix[half]) /
                       static_cast<double>(k - half));
    }

    if (detail_out) {
        detail_out->power_iters = iters;
        detail_out->tolerance_met = met;
    }
    return est;
}

BoundResult lambda_max_bound(const RealPolynomial& p, const PowerIterConfig& cfg) {
    BoundResult r{BoundMethod::LambdaMax, 0.0, {}};
    const double est = dominant_modulus(companion_matrix(p), cfg, &r.detail);
    r.radius = std::max(est * cfg.safety_factor, kMinBoundRadius);
    return r;
}

BoundResult radius(const RealPolynomial& p, BoundMethod method,
                   const PowerIterConfig& cfg) {
    BoundResult r;
    switch (method) {
        case BoundMethod::Cauchy: r = cauchy_bound(p); break;
        case BoundMethod::Lagrange: r = lagrange_bound(p); break;
        case BoundMethod::Aberth: r = aberth_bound(p); break;
        case BoundMethod::NewBound1: r = new_bound1(p); break;
        case BoundMethod::LambdaMax: r = lambda_max_bound(p, cfg); break;
    }
    r.radius = std::max(r.radius, kMinBoundRadius);
    if (!std::isfinite(r.radius))
        throw std::runtime_error("bound radius is not finite");
    return r;
}

}  // namespace dk
