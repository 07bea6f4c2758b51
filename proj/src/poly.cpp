#include "dk/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "dk/rng.hpp"

namespace dk {

RealPolynomial::RealPolynomial(std::vector<double> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2)
        throw std::invalid_argument("polynomial degree must be at least 1");
    if (coeffs_[0] != 1.0)
        throw std::invalid_argument("leading coefficient must be 1");
    for (double c : coeffs_)
        if (!std::isfinite(c))
            throw std::invalid_argument("coefficients must be finite");
}

Complex eval(const RealPolynomial& p, Complex z) {
    const auto& c = p.coeffs();
    Complex acc(c[0], 0.0);
    for (std::size_t k = 1; k < c.size(); ++k) acc = acc * z + c[k];
    return acc;
}

namespace {

// Expands prod (x - r_i) over long double factors and rounds once at the
// end. Real roots give linear factors, conjugate pairs give real quadratics.
std::vector<double> expand_real_factors(const std::vector<long double>& real_roots,
                                        const std::vector<std::complex<long double>>& pair_roots) {
    std::vector<long double> c{1.0L};
    auto mul_linear = [&c](long double r) {
        // times (x - r)
        c.push_back(0.0L);
        for (std::size_t k = c.size() - 1; k >= 1; --k) c[k] -= r * c[k - 1];
    };
    auto mul_quadratic = [&c](long double b, long double q) {
        // times (x^2 + b x + q)
        c.insert(c.end(), {0.0L, 0.0L});
        for (std::size_t k = c.size() - 1; k >= 2; --k)
            c[k] += b * c[k - 1] + q * c[k - 2];
        c[1] += b * c[0];
    };
    for (const auto& z : pair_roots)
        mul_quadratic(-2.0L * z.real(), z.real() * z.real() + z.imag() * z.imag());
    for (long double r : real_roots) mul_linear(r);
    std::vector<double> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = static_cast<double>(c[i]);
    return out;
}

}  // namespace

RealPolynomial from_roots(const RootSet& roots) {
    if (roots.empty()) throw std::invalid_argument("root set must be non-empty");

    // Pair every strictly complex root with an exact conjugate partner.
    std::vector<long double> reals;
    std::vector<std::complex<long double>> pairs;
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const Complex& z = roots[i];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("roots must be finite");
        if (used[i]) continue;
        if (z.imag() == 0.0) {
            reals.push_back(z.real());
            used[i] = true;
            continue;
        }
        bool matched = false;
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j]) continue;
            if (roots[j].real() == z.real() && roots[j].imag() == -z.imag()) {
                used[i] = used[j] = true;
                pairs.emplace_back(static_cast<long double>(z.real()),
                                   static_cast<long double>(std::abs(z.imag())));
                matched = true;
                break;
            }
        }
        if (!matched)
            throw std::invalid_argument("complex coefficients would result");
    }
    return RealPolynomial(expand_real_factors(reals, pairs));
}

RealPolynomial wilkinson(int n) {
    if (n < 1 || n > 170)
        throw std::invalid_argument("wilkinson degree must be in [1, 170]");
    std::vector<long double> c{1.0L};
    for (int i = 1; i <= n; ++i) {
        // times (x + i)
        c.push_back(0.0L);
        for (std::size_t k = c.size() - 1; k >= 1; --k)
            c[k] += static_cast<long double>(i) * c[k - 1];
    }
    std::vector<double> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        out[i] = static_cast<double>(c[i]);
        if (!std::isfinite(out[i]))
            throw std::invalid_argument("wilkinson coefficients overflow double at this degree");
    }
    return RealPolynomial(std::move(out));
}

RealPolynomial wilkinson_perturbed(int n, double eps, int k) {
    if (k < 0 || k >= n)
        throw std::invalid_argument("perturbation power must satisfy 0 <= k <= n-1");
    RealPolynomial w = wilkinson(n);
    std::vector<double> c = w.coeffs();
    c[c.size() - 1 - static_cast<std::size_t>(k)] -= eps;
    return RealPolynomial(std::move(c));
}

std::pair<RealPolynomial, RootSet> clustered(int n, double spacing) {
    if (n < 1) throw std::invalid_argument("degree must be at least 1");
    if (!(spacing > 0.0)) throw std::invalid_argument("spacing must be positive");
    std::vector<long double> c{1.0L};
    RootSet truth;
    truth.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const long double r = 1.0L + static_cast<long double>(spacing) * i;
        truth.emplace_back(-static_cast<double>(r), 0.0);
        c.push_back(0.0L);
        for (std::size_t k = c.size() - 1; k >= 1; --k) c[k] += r * c[k - 1];
    }
    std::vector<double> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = static_cast<double>(c[i]);
    return {RealPolynomial(std::move(out)), std::move(truth)};
}

RealPolynomial random_poly(int n, double lo, double hi, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("degree must be at least 1");
    if (!(lo <= hi)) throw std::invalid_argument("coefficient range is empty");
    Rng rng(seed);
    std::vector<double> c(static_cast<std::size_t>(n) + 1);
    c[0] = 1.0;
    for (std::size_t k = 1; k < c.size(); ++k) c[k] = rng.uniform(lo, hi);
    return RealPolynomial(std::move(c));
}

RealPolynomial scale_variable(const RealPolynomial& p, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("scale must be positive");
    const auto& c = p.coeffs();
    std::vector<double> out(c.size());
    long double factor = 1.0L;
    for (std::size_t k = 0; k < c.size(); ++k) {
        out[k] = static_cast<double>(c[k] / factor);
        factor *= static_cast<long double>(s);
    }
    return RealPolynomial(std::move(out));
}

RealPolynomial parse_coefficient_line(const std::string& line) {
    std::vector<double> coeffs;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) comma = line.size();
        std::size_t b = pos, e = comma;
        while (b < e && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(line[e - 1]))) --e;
        const std::string token = line.substr(b, e - b);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw std::invalid_argument("malformed coefficient token: '" + token + "'");
        coeffs.push_back(value);
        pos = comma + 1;
        if (comma == line.size()) break;
    }
    if (coeffs.size() < 2)
        throw std::invalid_argument("need at least two coefficients");
    if (coeffs[0] != 1.0)
        throw std::invalid_argument("leading coefficient must be 1");
    return RealPolynomial(std::move(coeffs));
}

RealPolynomial read_polynomial_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t b = 0;
        while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
        if (b == line.size() || line[b] == '#') continue;
        return parse_coefficient_line(line);
    }
    throw std::invalid_argument("no polynomial line in file: " + path);
}

}  // namespace dk
