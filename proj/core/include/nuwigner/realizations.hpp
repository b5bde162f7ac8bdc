#pragma once

#include <functional>
#include <vector>

#include "nuwigner/bipolynomial.hpp"
#include "nuwigner/report.hpp"

namespace nuwigner {

// Coordinate realizations of the single-mode algebra on polynomials in x,
// with the deformation written as delta (the same parameter as nu).

/// Dunkl-type lowering on monomials: x^n -> [n]_delta x^(n-1), applied termwise.
BiPolynomial monomial_lowering(const BiPolynomial& p);
/// x * p.
BiPolynomial monomial_raising(const BiPolynomial& p);
/// x d/dx.
BiPolynomial monomial_number(const BiPolynomial& p);
/// (-1)^(x d/dx): x^n -> (-1)^n x^n.
BiPolynomial monomial_reflection(const BiPolynomial& p);

/// phi_0 .. phi_max_n with phi_n = prod_{k<n} (x - k - delta (-1)^k).
struct QuasiPolyBasis {
    int max_n = 0;
    std::vector<BiPolynomial> polys;
};

QuasiPolyBasis build_quasi_basis(int max_n);

/// F(x+1, -delta) - F(x, delta).
BiPolynomial quasi_lowering(const BiPolynomial& f);
/// (x - delta) F(x-1, -delta).
BiPolynomial quasi_raising(const BiPolynomial& f);

/// Coefficients c_k(delta) with F = sum_k c_k phi_k, by top-degree elimination
/// against the monic phi_k. The basis is extended on demand.
std::vector<NuPolynomial> quasi_coordinates(const BiPolynomial& f, QuasiPolyBasis& basis);
BiPolynomial quasi_combination(const std::vector<NuPolynomial>& coords, const QuasiPolyBasis& basis);

/// R defined by the grading R phi_n = (-1)^n phi_n, extended delta-linearly.
BiPolynomial quasi_reflection(const BiPolynomial& f, QuasiPolyBasis& basis);

using PolyMap = std::function<BiPolynomial(const BiPolynomial&)>;

/// Extends `op` delta-linearly over the phi basis: sum_k c_k(delta) op(phi_k).
/// The raw coordinate operators also act on delta through T_delta, so raw
/// composition differs from this extension on delta-dependent coefficients.
BiPolynomial apply_delta_linear(const PolyMap& op, const BiPolynomial& f, QuasiPolyBasis& basis);

/// Every coordinate-realization identity for n = 0..max_n (max_n >= 2).
std::vector<AlgebraReport> audit_realizations(int max_n);

}  // namespace nuwigner
