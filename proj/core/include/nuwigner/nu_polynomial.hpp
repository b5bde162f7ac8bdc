#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "nuwigner/rational.hpp"

namespace nuwigner {

/// Exact polynomial in the deformation parameter nu with Gaussian-rational
/// coefficients. coeffs()[k] multiplies nu^k; there is never a trailing zero,
/// so the zero polynomial has an empty coefficient list and degree -1.
class NuPolynomial {
public:
    NuPolynomial() = default;
    NuPolynomial(GaussianRational constant);  // NOLINT(google-explicit-constructor)
    NuPolynomial(Rational constant) : NuPolynomial(GaussianRational(std::move(constant))) {}  // NOLINT
    NuPolynomial(long constant) : NuPolynomial(GaussianRational(constant)) {}                 // NOLINT
    NuPolynomial(int constant) : NuPolynomial(GaussianRational(constant)) {}                  // NOLINT
    explicit NuPolynomial(std::vector<GaussianRational> coeffs);
    NuPolynomial(std::initializer_list<long> coeffs);

    /// The monomial nu.
    static NuPolynomial nu();
    static NuPolynomial monomial(GaussianRational c, int power);

    const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_real() const;
    /// Coefficient of nu^k (zero beyond the degree).
    GaussianRational coeff(int k) const;
    const GaussianRational& leading() const { return coeffs_.back(); }

    NuPolynomial conj() const;
    NuPolynomial derivative() const;
    /// p(nu + shift).
    NuPolynomial shifted(const Rational& shift) const;

    GaussianRational eval(const Rational& nu) const;
    std::complex<double> eval(double nu) const;

    std::string to_string(const std::string& var = "nu") const;

    NuPolynomial operator-() const;
    NuPolynomial& operator+=(const NuPolynomial& o);
    NuPolynomial& operator-=(const NuPolynomial& o);
    NuPolynomial& operator*=(const NuPolynomial& o);
    NuPolynomial& operator*=(const GaussianRational& c);

    friend NuPolynomial operator+(NuPolynomial a, const NuPolynomial& b) { return a += b; }
    friend NuPolynomial operator-(NuPolynomial a, const NuPolynomial& b) { return a -= b; }
    friend NuPolynomial operator*(const NuPolynomial& a, const NuPolynomial& b);
    friend NuPolynomial operator*(NuPolynomial a, const GaussianRational& c) { return a *= c; }
    friend NuPolynomial operator*(const GaussianRational& c, NuPolynomial a) { return a *= c; }

    friend bool operator==(const NuPolynomial&, const NuPolynomial&) = default;
    /// Degree first, then coefficients from nu^0 upward. Deterministic, not algebraic.
    friend std::strong_ordering operator<=>(const NuPolynomial& a, const NuPolynomial& b);

private:
    void trim();

    std::vector<GaussianRational> coeffs_;
};

/// Quotient and remainder of division by a nonzero polynomial (field division).
std::pair<NuPolynomial, NuPolynomial> divmod(const NuPolynomial& num, const NuPolynomial& den);

/// Monic greatest common divisor (zero if both inputs are zero).
NuPolynomial gcd(NuPolynomial a, NuPolynomial b);

/// a / b when b divides a exactly; throws otherwise.
NuPolynomial exact_div(const NuPolynomial& a, const NuPolynomial& b);

}  // namespace nuwigner
