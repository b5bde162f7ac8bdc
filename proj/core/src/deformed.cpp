#include "nuwigner/deformed.hpp"

#include <string>

#include "nuwigner/errors.hpp"

namespace nuwigner {

namespace {

void require_nonnegative(long n, const char* what) {
    if (n < 0) throw Error(std::string(what) + ": argument must be >= 0, got " + std::to_string(n));
}

AlgebraReport mismatch(std::string id, long row, long col, const NuPolynomial& expected, const NuPolynomial& actual) {
    AlgebraReport r;
    r.relation_id = std::move(id);
    r.verdict = Verdict::Fail;
    r.witness = Witness{static_cast<std::size_t>(row), static_cast<std::size_t>(col), expected.to_string(),
                        actual.to_string()};
    return r;
}

}  // namespace

ParityClass parity(long n) { return (n % 2 == 0) ? ParityClass::Even : ParityClass::Odd; }

NuPolynomial deformed_number(long n) {
    require_nonnegative(n, "deformed_number");
    if (parity(n) == ParityClass::Even) return NuPolynomial(n);
    return NuPolynomial{n, 2};
}

NuPolynomial deformed_factorial(long n) {
    require_nonnegative(n, "deformed_factorial");
    NuPolynomial out(1);
    for (long k = 1; k <= n; ++k) out *= deformed_number(k);
    return out;
}

AlgebraReport check_pair_identities(long n) {
    require_nonnegative(n, "check_pair_identities");
    const std::string id = "numbers.pair[n=" + std::to_string(n) + "]";
    const NuPolynomial sum = deformed_number(n) + deformed_number(n + 1);
    const NuPolynomial sum_expected{2 * n + 1, 2};
    if (sum != sum_expected) return mismatch(id, n, n + 1, sum_expected, sum);
    const NuPolynomial gap = deformed_number(n + 2) - deformed_number(n);
    if (gap != NuPolynomial(2)) return mismatch(id, n + 2, n, NuPolynomial(2), gap);
    AlgebraReport r;
    r.relation_id = id;
    return r;
}

NuPolynomial cross_identity_signed_form(long m, long n) {
    const long sm = parity_sign(m);
    const long sn = parity_sign(n);
    // m - n - nu(2n+1)(-1)^m + nu(2m+1)(-1)^n - 2nu^2((-1)^m - (-1)^n)
    return NuPolynomial{m - n, -(2 * n + 1) * sm + (2 * m + 1) * sn, -2 * (sm - sn)};
}

NuPolynomial cross_identity_piecewise_form(long m, long n) {
    const bool n_even = parity(n) == ParityClass::Even;
    const bool m_even = parity(m) == ParityClass::Even;
    if (n_even && m_even) return NuPolynomial{m - n, 2 * (m - n)};
    if (n_even && !m_even) return NuPolynomial{m - n, 2 * (m + n + 1), 4};
    if (!n_even && m_even) return NuPolynomial{m - n, -2 * (m + n + 1), -4};
    return NuPolynomial{m - n, -2 * (m - n)};
}

AlgebraReport check_cross_identity(long m, long n) {
    require_nonnegative(m, "check_cross_identity");
    require_nonnegative(n, "check_cross_identity");
    const std::string id = "numbers.cross[m=" + std::to_string(m) + ",n=" + std::to_string(n) + "]";
    const NuPolynomial lhs = deformed_number(m) * deformed_number(n + 1) - deformed_number(n) * deformed_number(m + 1);
    const NuPolynomial signed_form = cross_identity_signed_form(m, n);
    if (lhs != signed_form) return mismatch(id + ".signed", m, n, signed_form, lhs);
    const NuPolynomial piecewise = cross_identity_piecewise_form(m, n);
    if (lhs != piecewise) return mismatch(id + ".piecewise", m, n, piecewise, lhs);
    AlgebraReport r;
    r.relation_id = id;
    return r;
}

std::complex<double> numeric_eval(const NuPolynomial& p, double nu) { return p.eval(nu); }

std::complex<double> numeric_eval(const RadicalSum& r, double nu) { return r.eval(nu); }

}  // namespace nuwigner
