#pragma once

#include <complex>

#include "nuwigner/nu_polynomial.hpp"
#include "nuwigner/radical_sum.hpp"
#include "nuwigner/report.hpp"

namespace nuwigner {

enum class ParityClass { Even, Odd };

ParityClass parity(long n);
/// (-1)^n.
inline long parity_sign(long n) { return (n % 2 == 0) ? 1 : -1; }

/// [n]_nu = n + nu (1 - (-1)^n): n for even n, n + 2 nu for odd n.
NuPolynomial deformed_number(long n);

/// [n]_nu! = [1]_nu [2]_nu ... [n]_nu, with [0]_nu! = 1.
NuPolynomial deformed_factorial(long n);

/// [n] + [n+1] = 2n + 1 + 2nu and [n+2] - [n] = 2, as polynomial identities.
AlgebraReport check_pair_identities(long n);

/// Signed closed form of [m][n+1] - [n][m+1].
NuPolynomial cross_identity_signed_form(long m, long n);
/// Piecewise form of the same quantity selected by (parity(n), parity(m)).
NuPolynomial cross_identity_piecewise_form(long m, long n);
/// Three-way comparison of [m][n+1] - [n][m+1] with both closed forms.
AlgebraReport check_cross_identity(long m, long n);

std::complex<double> numeric_eval(const NuPolynomial& p, double nu);
std::complex<double> numeric_eval(const RadicalSum& r, double nu);

}  // namespace nuwigner
