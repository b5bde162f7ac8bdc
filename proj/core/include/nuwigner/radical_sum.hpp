#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "nuwigner/nu_polynomial.hpp"

namespace nuwigner {

/// One summand coeff(nu) * sqrt(radicand(nu)).
struct RadicalTerm {
    NuPolynomial coeff;
    NuPolynomial radicand;

    friend bool operator==(const RadicalTerm&, const RadicalTerm&) = default;
};

/// sqrt(p) rewritten as multiplier * sqrt(radicand) on the domain nu > -1/2.
///
/// The radicand has integer coefficients, positive leading coefficient and
/// square-free integer content. Repeated polynomial factors are pulled out when
/// they are provably positive for nu > -1/2; any factor that fails that test
/// stays under the root and `square_free` is false. Integer contents whose
/// square part could not be determined within the factoring budget also clear
/// `square_free`.
struct ReducedRadical {
    NuPolynomial multiplier;
    NuPolynomial radicand;
    bool square_free = true;
};

/// Throws Error when p is zero or has a non-real coefficient.
ReducedRadical reduce_radical(const NuPolynomial& p);

/// True if p > 0 for every nu > -1/2, decided by the sign pattern of p(t - 1/2).
/// A false result means "not proven", not "negative somewhere".
bool positive_on_domain(const NuPolynomial& p);

/// Exact element of Q(i)(nu)[sqrt(p1), sqrt(p2), ...]: a finite sum of terms
/// coeff(nu) * sqrt(radicand(nu)).
///
/// Canonical form: every radicand is a reduced radical (see ReducedRadical),
/// radicands are pairwise distinct and sorted, no coefficient is zero, and
/// zero is the empty term list. When every radicand is square-free the square
/// roots are linearly independent over Q(i)(nu), so equality of canonical forms
/// is equality of functions.
class RadicalSum {
public:
    RadicalSum() = default;
    RadicalSum(NuPolynomial p);                                               // NOLINT(google-explicit-constructor)
    RadicalSum(GaussianRational c) : RadicalSum(NuPolynomial(std::move(c))) {}  // NOLINT(google-explicit-constructor)
    RadicalSum(long c) : RadicalSum(NuPolynomial(c)) {}                       // NOLINT(google-explicit-constructor)
    RadicalSum(int c) : RadicalSum(NuPolynomial(c)) {}                        // NOLINT(google-explicit-constructor)

    /// sqrt(p); sqrt(0) is zero.
    static RadicalSum sqrt(const NuPolynomial& p);
    /// coeff * sqrt(radicand), canonicalized.
    static RadicalSum term(const NuPolynomial& coeff, const NuPolynomial& radicand);
    /// Sum of arbitrary (possibly non-canonical) terms.
    static RadicalSum from_terms(const std::vector<RadicalTerm>& terms);

    const std::vector<RadicalTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// The polynomial value when there is no genuine radical.
    std::optional<NuPolynomial> as_polynomial() const;
    /// Every radicand is square-free, so a nonzero canonical form is a nonzero function.
    bool zero_test_conclusive() const;
    int max_degree() const;

    /// Rebuilds the canonical form from the current terms.
    RadicalSum canonicalized() const { return from_terms(terms_); }
    RadicalSum conj() const;
    /// Exact specialization at a rational nu.
    RadicalSum at(const Rational& nu) const;

    /// Numeric value; throws NegativeRadicand if a radicand is below -tolerance.
    std::complex<double> eval(double nu, double tolerance = 1e-12) const;

    std::string to_string() const;

    RadicalSum operator-() const;
    RadicalSum& operator+=(const RadicalSum& o);
    RadicalSum& operator-=(const RadicalSum& o);
    RadicalSum& operator*=(const RadicalSum& o);
    RadicalSum& operator*=(const NuPolynomial& p);

    friend RadicalSum operator+(RadicalSum a, const RadicalSum& b) { return a += b; }
    friend RadicalSum operator-(RadicalSum a, const RadicalSum& b) { return a -= b; }
    friend RadicalSum operator*(const RadicalSum& a, const RadicalSum& b);
    friend RadicalSum operator*(RadicalSum a, const NuPolynomial& p) { return a *= p; }
    friend RadicalSum operator*(const NuPolynomial& p, RadicalSum a) { return a *= p; }

    friend bool operator==(const RadicalSum&, const RadicalSum&) = default;

private:
    void add_term(NuPolynomial coeff, const NuPolynomial& canonical_radicand);

    std::vector<RadicalTerm> terms_;
};

}  // namespace nuwigner
