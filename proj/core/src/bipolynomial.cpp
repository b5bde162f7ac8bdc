#include "nuwigner/bipolynomial.hpp"

#include <algorithm>
#include <sstream>

namespace nuwigner {

BiPolynomial::BiPolynomial(GaussianRational c) {
    if (!c.is_zero()) terms_.emplace(Key{0, 0}, std::move(c));
}

BiPolynomial BiPolynomial::x() { return monomial(GaussianRational(1), 1, 0); }

BiPolynomial BiPolynomial::delta() { return monomial(GaussianRational(1), 0, 1); }

BiPolynomial BiPolynomial::monomial(GaussianRational c, int x_degree, int delta_degree) {
    BiPolynomial p;
    p.add({x_degree, delta_degree}, c);
    return p;
}

BiPolynomial BiPolynomial::from_delta(const NuPolynomial& p) {
    BiPolynomial out;
    for (int k = 0; k <= p.degree(); ++k) out.add({0, k}, p.coeff(k));
    return out;
}

void BiPolynomial::add(const Key& k, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int BiPolynomial::degree_x() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

NuPolynomial BiPolynomial::coeff_x(int k) const {
    std::vector<GaussianRational> out;
    for (const auto& [key, c] : terms_) {
        if (key.first != k) continue;
        if (out.size() <= static_cast<std::size_t>(key.second)) out.resize(static_cast<std::size_t>(key.second) + 1);
        out[static_cast<std::size_t>(key.second)] = c;
    }
    return NuPolynomial(std::move(out));
}

BiPolynomial BiPolynomial::shift_x(long shift) const {
    BiPolynomial out;
    for (const auto& [key, c] : terms_) {
        const int n = key.first;
        // (x + s)^n = sum_k C(n,k) s^(n-k) x^k
        mpz_class s_pow = 1;
        for (int k = n; k >= 0; --k) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
            out.add({k, key.second}, c * GaussianRational(Rational(mpz_class(binom * s_pow))));
            s_pow *= shift;
        }
    }
    return out;
}

BiPolynomial BiPolynomial::flip_delta() const {
    BiPolynomial out = *this;
    for (auto& [key, c] : out.terms_)
        if (key.second % 2 == 1) c = -c;
    return out;
}

BiPolynomial BiPolynomial::at_delta_zero() const {
    BiPolynomial out;
    for (const auto& [key, c] : terms_)
        if (key.second == 0) out.add(key, c);
    return out;
}

std::string BiPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [key, c] = *it;
        std::string mono;
        if (key.first > 0) mono += key.first == 1 ? "x" : "x^" + std::to_string(key.first);
        if (key.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += key.second == 1 ? "delta" : "delta^" + std::to_string(key.second);
        }
        bool negative = c.is_real() && c.re().sign() < 0;
        std::string coeff = negative ? (-c).to_string() : c.to_string();
        std::string body;
        if (mono.empty()) {
            body = coeff;
        } else if (coeff == "1") {
            body = mono;
        } else {
            body = coeff + "*" + mono;
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

BiPolynomial BiPolynomial::operator-() const {
    BiPolynomial out = *this;
    for (auto& [key, c] : out.terms_) c = -c;
    return out;
}

BiPolynomial& BiPolynomial::operator+=(const BiPolynomial& o) {
    for (const auto& [key, c] : o.terms_) add(key, c);
    return *this;
}

BiPolynomial& BiPolynomial::operator-=(const BiPolynomial& o) {
    for (const auto& [key, c] : o.terms_) add(key, -c);
    return *this;
}

BiPolynomial& BiPolynomial::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_) v *= c;
    return *this;
}

BiPolynomial operator*(const BiPolynomial& a, const BiPolynomial& b) {
    BiPolynomial out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) out.add({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return out;
}

}  // namespace nuwigner
