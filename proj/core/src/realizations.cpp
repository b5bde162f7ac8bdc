#include "nuwigner/realizations.hpp"

#include <string>

#include "nuwigner/deformed.hpp"
#include "nuwigner/errors.hpp"
#include "nuwigner/single_mode.hpp"

namespace nuwigner {

namespace {

const char* const kDeltaNote = "delta identified with nu";
const char* const kQuasiNote =
    "delta identified with nu; operators extended delta-linearly over the phi basis; "
    "R reconstructed from the grading R phi_n = (-1)^n phi_n";

AlgebraReport compare(const std::string& id, int n, const BiPolynomial& expected, const BiPolynomial& actual,
                      const char* note) {
    AlgebraReport r;
    r.relation_id = id + "[n=" + std::to_string(n) + "]";
    r.note = note;
    if (expected != actual) {
        r.verdict = Verdict::Fail;
        r.witness = Witness{static_cast<std::size_t>(n), static_cast<std::size_t>(n), expected.to_string(),
                            actual.to_string()};
    }
    return r;
}

BiPolynomial delta_poly(const NuPolynomial& p) { return BiPolynomial::from_delta(p); }

}  // namespace

BiPolynomial monomial_lowering(const BiPolynomial& p) {
    BiPolynomial out;
    for (const auto& [key, c] : p.terms()) {
        if (key.first == 0) continue;
        out += BiPolynomial::monomial(c, key.first - 1, key.second) * delta_poly(deformed_number(key.first));
    }
    return out;
}

BiPolynomial monomial_raising(const BiPolynomial& p) { return BiPolynomial::x() * p; }

BiPolynomial monomial_number(const BiPolynomial& p) {
    BiPolynomial out;
    for (const auto& [key, c] : p.terms()) out += BiPolynomial::monomial(c * GaussianRational(key.first), key.first, key.second);
    return out;
}

BiPolynomial monomial_reflection(const BiPolynomial& p) {
    BiPolynomial out;
    for (const auto& [key, c] : p.terms())
        out += BiPolynomial::monomial(c * GaussianRational(parity_sign(key.first)), key.first, key.second);
    return out;
}

QuasiPolyBasis build_quasi_basis(int max_n) {
    if (max_n < 0) throw InvalidDimension("build_quasi_basis: max_n must be >= 0");
    QuasiPolyBasis b{max_n, {BiPolynomial(1)}};
    for (int k = 0; k < max_n; ++k) {
        const BiPolynomial factor = BiPolynomial::x() - BiPolynomial(k) - BiPolynomial::delta() * GaussianRational(parity_sign(k));
        b.polys.push_back(b.polys.back() * factor);
    }
    return b;
}

BiPolynomial quasi_lowering(const BiPolynomial& f) { return f.shift_x(1).flip_delta() - f; }

BiPolynomial quasi_raising(const BiPolynomial& f) {
    return (BiPolynomial::x() - BiPolynomial::delta()) * f.shift_x(-1).flip_delta();
}

std::vector<NuPolynomial> quasi_coordinates(const BiPolynomial& f, QuasiPolyBasis& basis) {
    const int top = f.degree_x();
    if (top > basis.max_n) basis = build_quasi_basis(top);
    std::vector<NuPolynomial> coords(static_cast<std::size_t>(std::max(top, -1) + 1));
    BiPolynomial rest = f;
    for (int k = top; k >= 0; --k) {
        const NuPolynomial c = rest.coeff_x(k);
        if (c.is_zero()) continue;
        coords[static_cast<std::size_t>(k)] = c;
        rest -= delta_poly(c) * basis.polys[static_cast<std::size_t>(k)];
    }
    if (!rest.is_zero()) throw Error("quasi_coordinates: residual after elimination: " + rest.to_string());
    return coords;
}

BiPolynomial quasi_combination(const std::vector<NuPolynomial>& coords, const QuasiPolyBasis& basis) {
    BiPolynomial out;
    for (std::size_t k = 0; k < coords.size(); ++k)
        if (!coords[k].is_zero()) out += delta_poly(coords[k]) * basis.polys.at(k);
    return out;
}

BiPolynomial quasi_reflection(const BiPolynomial& f, QuasiPolyBasis& basis) {
    std::vector<NuPolynomial> coords = quasi_coordinates(f, basis);
    for (std::size_t k = 1; k < coords.size(); k += 2) coords[k] = -coords[k];
    return quasi_combination(coords, basis);
}

BiPolynomial apply_delta_linear(const PolyMap& op, const BiPolynomial& f, QuasiPolyBasis& basis) {
    const std::vector<NuPolynomial> coords = quasi_coordinates(f, basis);
    BiPolynomial out;
    for (std::size_t k = 0; k < coords.size(); ++k)
        if (!coords[k].is_zero()) out += delta_poly(coords[k]) * op(basis.polys[k]);
    return out;
}

std::vector<AlgebraReport> audit_realizations(int max_n) {
    if (max_n < 2) throw InvalidDimension("audit_realizations: max_n must be >= 2");
    QuasiPolyBasis basis = build_quasi_basis(max_n + 2);  // headroom so no call rebuilds it
    const auto& phi = basis.polys;
    const BiPolynomial delta = BiPolynomial::delta();
    const BiPolynomial two_delta = delta * GaussianRational(2);
    const PolyMap lower = quasi_lowering;
    const PolyMap raise = quasi_raising;
    const SingleModeSet abstract = build_single_mode(static_cast<std::size_t>(max_n) + 1);

    std::vector<AlgebraReport> out;
    for (int n = 0; n <= max_n; ++n) {
        const auto un = static_cast<std::size_t>(n);
        const BiPolynomial number = delta_poly(deformed_number(n));
        const BiPolynomial lowered_expected = n == 0 ? BiPolynomial() : number * phi[un - 1];

        out.push_back(compare("realizations/quasi a phi_n = [n] phi_(n-1)", n, lowered_expected,
                              quasi_lowering(phi[un]), kDeltaNote));
        out.push_back(compare("realizations/quasi adag phi_n = phi_(n+1)", n, phi[un + 1], quasi_raising(phi[un]),
                              kDeltaNote));

        BiPolynomial generated(1);
        for (int k = 0; k < n; ++k) generated = quasi_raising(generated);
        out.push_back(compare("realizations/quasi (adag)^n 1 = phi_n", n, phi[un], generated, kDeltaNote));

        const BiPolynomial commuted = apply_delta_linear(lower, apply_delta_linear(raise, phi[un], basis), basis) -
                                      apply_delta_linear(raise, apply_delta_linear(lower, phi[un], basis), basis);
        const BiPolynomial one_plus_2dR = phi[un] + two_delta * quasi_reflection(phi[un], basis);
        out.push_back(compare("realizations/quasi [a,adag] phi_n = (1 + 2delta R) phi_n", n, one_plus_2dR, commuted,
                              kQuasiNote));

        const BiPolynomial number_op = apply_delta_linear(raise, apply_delta_linear(lower, phi[un], basis), basis) -
                                       delta * phi[un] + delta * quasi_reflection(phi[un], basis);
        out.push_back(compare("realizations/quasi (adag a - delta + delta R) phi_n = n phi_n", n,
                              phi[un] * GaussianRational(n), number_op, kQuasiNote));

        // Raw composition lets T_delta act on the delta-dependent coefficient [n]_delta.
        const BiPolynomial raw = quasi_lowering(quasi_raising(phi[un])) - quasi_raising(quasi_lowering(phi[un]));
        {
            AlgebraReport r = compare("realizations/quasi raw-composition [a,adag] phi_n = (1 + 2delta R) phi_n", n,
                                      one_plus_2dR, raw, kQuasiNote);
            if (r.verdict == Verdict::Fail) {
                const BiPolynomial corrected = (BiPolynomial(1) + two_delta) * phi[un];
                if (corrected == raw) {
                    r.verdict = Verdict::PassWithCaveat;
                    r.caveat =
                        "printed form fails; holds as [a,adag] phi_n = (1 + 2delta) phi_n when T_delta also acts on "
                        "delta-dependent coefficients";
                }
            }
            out.push_back(std::move(r));
        }

        const BiPolynomial undeformed = n == 0 ? BiPolynomial() : phi[un - 1].at_delta_zero() * GaussianRational(n);
        out.push_back(compare("realizations/quasi delta=0: a phi_n = n phi_(n-1)", n, undeformed,
                              quasi_lowering(phi[un].at_delta_zero()), kDeltaNote));

        // Monomial basis f_n = x^n.
        const BiPolynomial xn = BiPolynomial::monomial(GaussianRational(1), n, 0);
        const BiPolynomial xn_minus = n == 0 ? BiPolynomial() : BiPolynomial::monomial(GaussianRational(1), n - 1, 0);
        const BiPolynomial xn_plus = BiPolynomial::monomial(GaussianRational(1), n + 1, 0);
        out.push_back(compare("realizations/monomial a f_n = (n + delta - delta(-1)^n) f_(n-1)", n, number * xn_minus,
                              monomial_lowering(xn), kDeltaNote));
        out.push_back(compare("realizations/monomial adag f_n = f_(n+1)", n, xn_plus, monomial_raising(xn), kDeltaNote));
        out.push_back(compare("realizations/monomial N f_n = n f_n", n, xn * GaussianRational(n), monomial_number(xn),
                              kDeltaNote));
        out.push_back(compare("realizations/monomial [a,adag] f_n = (1 + 2delta R) f_n", n,
                              xn + two_delta * monomial_reflection(xn),
                              monomial_lowering(monomial_raising(xn)) - monomial_raising(monomial_lowering(xn)),
                              kDeltaNote));

        // Both realizations reproduce the abstract product a_(n-1,n) adag_(n,n-1) = [n].
        if (n >= 1) {
            const RadicalSum abstract_product = abstract.a(un - 1, un) * abstract.a_dag(un, un - 1);
            const NuPolynomial target = abstract_product.as_polynomial().value_or(NuPolynomial());
            const std::vector<NuPolynomial> down = quasi_coordinates(quasi_lowering(phi[un]), basis);
            const std::vector<NuPolynomial> up = quasi_coordinates(quasi_raising(phi[un - 1]), basis);
            const NuPolynomial quasi_product = down.at(un - 1) * up.at(un);
            out.push_back(compare("realizations/quasi matrix elements match single-mode", n,
                                  BiPolynomial::from_delta(target), BiPolynomial::from_delta(quasi_product),
                                  kDeltaNote));
            const NuPolynomial mono_product = monomial_lowering(xn).coeff_x(n - 1) * monomial_raising(xn_minus).coeff_x(n);
            out.push_back(compare("realizations/monomial matrix elements match single-mode", n,
                                  BiPolynomial::from_delta(target), BiPolynomial::from_delta(mono_product),
                                  kDeltaNote));
        }
    }
    return out;
}

}  // namespace nuwigner
