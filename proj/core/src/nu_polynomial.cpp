#include "nuwigner/nu_polynomial.hpp"

#include <sstream>

#include "nuwigner/errors.hpp"

namespace nuwigner {

NuPolynomial::NuPolynomial(GaussianRational constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

NuPolynomial::NuPolynomial(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

NuPolynomial::NuPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

NuPolynomial NuPolynomial::nu() { return monomial(GaussianRational(1), 1); }

NuPolynomial NuPolynomial::monomial(GaussianRational c, int power) {
    if (c.is_zero()) return {};
    std::vector<GaussianRational> coeffs(static_cast<std::size_t>(power) + 1);
    coeffs.back() = std::move(c);
    return NuPolynomial(std::move(coeffs));
}

void NuPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool NuPolynomial::is_real() const {
    for (const auto& c : coeffs_)
        if (!c.is_real()) return false;
    return true;
}

GaussianRational NuPolynomial::coeff(int k) const {
    if (k < 0 || k > degree()) return {};
    return coeffs_[static_cast<std::size_t>(k)];
}

NuPolynomial NuPolynomial::conj() const {
    NuPolynomial out = *this;
    for (auto& c : out.coeffs_) c = c.conj();
    return out;
}

NuPolynomial NuPolynomial::derivative() const {
    std::vector<GaussianRational> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d.push_back(coeffs_[k] * GaussianRational(static_cast<long>(k)));
    return NuPolynomial(std::move(d));
}

NuPolynomial NuPolynomial::shifted(const Rational& shift) const {
    // Horner in the shifted variable: p(nu + s) = (...(c_d (nu+s) + c_{d-1})(nu+s) ...).
    const NuPolynomial lin(std::vector<GaussianRational>{GaussianRational(shift), GaussianRational(1)});
    NuPolynomial out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        out = out * lin;
        out += NuPolynomial(*it);
    }
    return out;
}

GaussianRational NuPolynomial::eval(const Rational& nu) const {
    GaussianRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= GaussianRational(nu);
        acc += *it;
    }
    return acc;
}

std::complex<double> NuPolynomial::eval(double nu) const {
    std::complex<double> acc{0.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * nu + it->to_complex();
    return acc;
}

std::string NuPolynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const auto& c = coeffs_[k];
        if (c.is_zero()) continue;
        std::string body;
        bool negative = false;
        if (c.is_real()) {
            negative = c.re().sign() < 0;
            const Rational mag = negative ? -c.re() : c.re();
            if (k == 0 || mag != Rational(1)) body = mag.to_string();
        } else {
            body = c.to_string();
        }
        if (k > 0) {
            const std::string mono = (k == 1) ? var : var + "^" + std::to_string(k);
            body = body.empty() ? mono : body + "*" + mono;
        }
        if (first) {
            out << (negative ? "-" : "") << body;
        } else {
            out << (negative ? " - " : " + ") << body;
        }
        first = false;
    }
    return out.str();
}

NuPolynomial NuPolynomial::operator-() const {
    NuPolynomial out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

NuPolynomial& NuPolynomial::operator+=(const NuPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

NuPolynomial& NuPolynomial::operator-=(const NuPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

NuPolynomial operator*(const NuPolynomial& a, const NuPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return NuPolynomial(std::move(out));
}

NuPolynomial& NuPolynomial::operator*=(const NuPolynomial& o) { return *this = *this * o; }

NuPolynomial& NuPolynomial::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::strong_ordering operator<=>(const NuPolynomial& a, const NuPolynomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
        if (auto c = a.coeffs_[k] <=> b.coeffs_[k]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::pair<NuPolynomial, NuPolynomial> divmod(const NuPolynomial& num, const NuPolynomial& den) {
    if (den.is_zero()) throw Error("polynomial division by zero");
    std::vector<GaussianRational> rem = num.coeffs();
    const int dd = den.degree();
    const int nd = num.degree();
    if (nd < dd) return {NuPolynomial(), num};
    std::vector<GaussianRational> quot(static_cast<std::size_t>(nd - dd) + 1);
    const GaussianRational& lead = den.leading();
    for (int k = nd; k >= dd; --k) {
        const GaussianRational& top = rem[static_cast<std::size_t>(k)];
        if (top.is_zero()) continue;
        GaussianRational q = top / lead;
        for (int i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k - dd + i)] -= q * den.coeffs()[static_cast<std::size_t>(i)];
        quot[static_cast<std::size_t>(k - dd)] = std::move(q);
    }
    return {NuPolynomial(std::move(quot)), NuPolynomial(std::move(rem))};
}

NuPolynomial gcd(NuPolynomial a, NuPolynomial b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    const GaussianRational inv = GaussianRational(1) / a.leading();
    return a * inv;
}

NuPolynomial exact_div(const NuPolynomial& a, const NuPolynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error("exact_div: " + b.to_string() + " does not divide " + a.to_string());
    return q;
}

}  // namespace nuwigner
