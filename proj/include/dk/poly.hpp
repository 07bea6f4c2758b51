#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dk {

using Complex = std::complex<double>;

/// Ordered list of complex numbers; used both for true roots and for the
/// iterates of the solver. Length always matches the polynomial degree.
using RootSet = std::vector<Complex>;

/// Monic polynomial with real coefficients in descending powers:
/// coeffs = [1, a_2, ..., a_{n+1}] represents
/// x^n + a_2 x^(n-1) + ... + a_n x + a_{n+1}.
///
/// The constructor enforces the invariants: leading coefficient exactly 1,
/// every coefficient finite, degree >= 1.
class RealPolynomial {
public:
    explicit RealPolynomial(std::vector<double> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    bool operator==(const RealPolynomial& other) const = default;

private:
    std::vector<double> coeffs_;
};

/// p(z) by Horner's rule, one left-to-right pass in complex double
/// arithmetic. Overflow to a non-finite value is returned as-is; callers
/// that care must check.
Complex eval(const RealPolynomial& p, Complex z);

/// Monic polynomial with the given roots. The root multiset must be closed
/// under complex conjugation so the coefficients come out real; conjugate
/// pairs are expanded as real quadratic factors, so clean pairs leave no
/// imaginary residue at all. Throws std::invalid_argument otherwise.
RealPolynomial from_roots(const RootSet& roots);

/// prod_{i=1..n} (x + i); exact integer roots -1, -2, ..., -n.
/// Valid for 1 <= n <= 170, subject to the coefficients staying finite in
/// double precision (the largest elementary-symmetric coefficient overflows
/// at n = 170 even though 170! does not).
RealPolynomial wilkinson(int n);

/// wilkinson(n) with eps subtracted from the coefficient of x^k.
/// Requires 0 <= k <= n-1.
RealPolynomial wilkinson_perturbed(int n, double eps, int k);

/// Polynomial with real roots -(1 + spacing*i) for i = 1..n, packed near -1.
/// Returns the polynomial plus the ground-truth roots.
std::pair<RealPolynomial, RootSet> clustered(int n, double spacing);

/// Monic polynomial of degree n with the non-leading coefficients drawn
/// uniformly from [lo, hi]. Pure function of (n, lo, hi, seed).
RealPolynomial random_poly(int n, double lo, double hi, std::uint64_t seed);

/// Variable substitution q(y) = p(s*y) / s^n: coefficient a_k picks up a
/// factor s^(1-k), and the roots of q are the roots of p divided by s.
/// Requires s > 0.
RealPolynomial scale_variable(const RealPolynomial& p, double s);

/// One polynomial per line, comma-separated real coefficients in descending
/// powers; '#'-prefixed lines are comments. The leading coefficient must
/// parse to exactly 1.0. Throws std::invalid_argument naming the offending
/// token.
RealPolynomial parse_coefficient_line(const std::string& line);

/// Reads the first non-comment, non-blank line of a polynomial file.
RealPolynomial read_polynomial_file(const std::string& path);

}  // namespace dk
