#pragma once

#include <map>
#include <string>
#include <utility>

#include "nuwigner/nu_polynomial.hpp"

namespace nuwigner {

/// Exact polynomial in (x, delta) with Gaussian-rational coefficients. Only
/// nonzero coefficients are stored, keyed by (x-degree, delta-degree).
class BiPolynomial {
public:
    using Key = std::pair<int, int>;

    BiPolynomial() = default;
    BiPolynomial(GaussianRational c);  // NOLINT(google-explicit-constructor)
    BiPolynomial(long c) : BiPolynomial(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)

    static BiPolynomial x();
    static BiPolynomial delta();
    static BiPolynomial monomial(GaussianRational c, int x_degree, int delta_degree);
    /// Embeds a polynomial in nu as the same polynomial in delta.
    static BiPolynomial from_delta(const NuPolynomial& p);

    const std::map<Key, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// -1 for zero.
    int degree_x() const;
    /// Coefficient of x^k as a polynomial in delta (returned as a NuPolynomial).
    NuPolynomial coeff_x(int k) const;

    /// F(x + shift, delta).
    BiPolynomial shift_x(long shift) const;
    /// F(x, -delta).
    BiPolynomial flip_delta() const;
    /// F(x, 0).
    BiPolynomial at_delta_zero() const;

    std::string to_string() const;

    BiPolynomial operator-() const;
    BiPolynomial& operator+=(const BiPolynomial& o);
    BiPolynomial& operator-=(const BiPolynomial& o);
    BiPolynomial& operator*=(const GaussianRational& c);

    friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) { return a += b; }
    friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial& b) { return a -= b; }
    friend BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b);
    friend BiPolynomial operator*(BiPolynomial a, const GaussianRational& c) { return a *= c; }

    friend bool operator==(const BiPolynomial&, const BiPolynomial&) = default;

private:
    void add(const Key& k, const GaussianRational& c);

    std::map<Key, GaussianRational> terms_;
};

}  // namespace nuwigner
