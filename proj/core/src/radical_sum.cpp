#include "nuwigner/radical_sum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "nuwigner/errors.hpp"

namespace nuwigner {

namespace {

// Trial division stops after this many candidate divisors; the cofactor is then
// left unsplit and the radical is flagged as not provably square-free.
constexpr unsigned long kTrialDivisionBudget = 1'000'000;

struct SquareSplit {
    mpz_class root = 1;         // n = root^2 * square_free
    mpz_class square_free = 1;
    bool complete = true;
};

SquareSplit split_square(mpz_class n) {
    SquareSplit out;
    if (n <= 1) {
        out.square_free = n;
        return out;
    }
    unsigned long tried = 0;
    for (mpz_class p = 2; p * p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (++tried > kTrialDivisionBudget) {
            out.square_free *= n;
            out.complete = false;
            return out;
        }
        unsigned exponent = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
            n /= p;
            ++exponent;
        }
        for (unsigned k = 0; k < exponent / 2; ++k) out.root *= p;
        if (exponent % 2 == 1) out.square_free *= p;
    }
    // n now has at most two prime factors, so it is either a square or square-free.
    if (mpz_perfect_square_p(n.get_mpz_t()) != 0) {
        out.root *= sqrt(n);
    } else {
        out.square_free *= n;
    }
    return out;
}

// p = scale * primitive, primitive has coprime integer coefficients and a
// positive leading coefficient.
std::pair<Rational, NuPolynomial> primitive_split(const NuPolynomial& p) {
    mpz_class lcm_den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.re().den().get_mpz_t());
    mpz_class content = 0;
    std::vector<mpz_class> ints;
    ints.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        mpz_class v = c.re().num() * (lcm_den / c.re().den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        ints.push_back(std::move(v));
    }
    if (ints.back() < 0) content = -content;
    std::vector<GaussianRational> prim;
    prim.reserve(ints.size());
    for (auto& v : ints) prim.emplace_back(Rational(mpz_class(v / content)));
    return {Rational(content, lcm_den), NuPolynomial(std::move(prim))};
}

NuPolynomial primitive_of(const NuPolynomial& p) { return primitive_split(p).second; }

// Square-free decomposition of a primitive polynomial (Musser's algorithm):
// returns (factor, multiplicity) with pairwise coprime primitive factors.
std::vector<std::pair<NuPolynomial, int>> squarefree_factors(const NuPolynomial& f) {
    std::vector<std::pair<NuPolynomial, int>> out;
    NuPolynomial c = gcd(f, f.derivative());
    NuPolynomial w = exact_div(f, c);
    for (int i = 1; w.degree() > 0; ++i) {
        NuPolynomial y = gcd(w, c);
        NuPolynomial z = exact_div(w, y);
        if (z.degree() > 0) out.emplace_back(primitive_of(z), i);
        w = std::move(y);
        c = exact_div(c, w);
    }
    return out;
}

NuPolynomial power(const NuPolynomial& p, int e) {
    NuPolynomial out(1);
    for (int k = 0; k < e; ++k) out *= p;
    return out;
}

ReducedRadical reduce_uncached(const NuPolynomial& p) {
    if (p.is_zero()) throw Error("reduce_radical: zero radicand");
    if (!p.is_real()) throw Error("reduce_radical: radicand must have real coefficients: " + p.to_string());

    auto [scale, prim] = primitive_split(p);
    ReducedRadical out;
    NuPolynomial extracted(1);
    NuPolynomial kept(1);
    if (prim.degree() > 0) {
        for (const auto& [factor, mult] : squarefree_factors(prim)) {
            if (mult >= 2 && positive_on_domain(factor)) {
                extracted *= power(factor, mult / 2);
                if (mult % 2 == 1) kept *= factor;
            } else {
                kept *= power(factor, mult);
                if (mult >= 2) out.square_free = false;
            }
        }
    }

    // sqrt(a/b) = sqrt(a*b)/b, then split a*b into root^2 * square_free.
    const bool negative = scale.sign() < 0;
    const Rational magnitude = negative ? -scale : scale;
    SquareSplit split = split_square(magnitude.num() * magnitude.den());
    if (!split.complete) out.square_free = false;
    GaussianRational constant(Rational(split.root, magnitude.den()));
    if (negative) constant *= GaussianRational::i();

    out.multiplier = extracted * constant;
    out.radicand = kept * GaussianRational(Rational(split.square_free));
    return out;
}

bool radicand_square_free(const NuPolynomial& r) {
    if (r.degree() > 0 && gcd(r, r.derivative()).degree() > 0) return false;
    auto [scale, prim] = primitive_split(r);
    (void)prim;
    if (!scale.is_integer() || scale.sign() < 0) return false;
    SquareSplit split = split_square(scale.num());
    return split.complete && split.root == 1;
}

bool is_one(const NuPolynomial& p) { return p.degree() == 0 && p.leading() == GaussianRational(1); }

}  // namespace

bool positive_on_domain(const NuPolynomial& p) {
    if (p.is_zero() || !p.is_real()) return false;
    const NuPolynomial q = p.shifted(Rational(-1, 2));
    bool any_positive = false;
    for (const auto& c : q.coeffs()) {
        if (c.re().sign() < 0) return false;
        if (c.re().sign() > 0) any_positive = true;
    }
    return any_positive;
}

ReducedRadical reduce_radical(const NuPolynomial& p) {
    thread_local std::map<NuPolynomial, ReducedRadical> cache;
    if (auto it = cache.find(p); it != cache.end()) return it->second;
    ReducedRadical r = reduce_uncached(p);
    cache.emplace(p, r);
    return r;
}

RadicalSum::RadicalSum(NuPolynomial p) {
    if (!p.is_zero()) terms_.push_back({std::move(p), NuPolynomial(1)});
}

RadicalSum RadicalSum::sqrt(const NuPolynomial& p) { return term(NuPolynomial(1), p); }

RadicalSum RadicalSum::term(const NuPolynomial& coeff, const NuPolynomial& radicand) {
    RadicalSum out;
    if (coeff.is_zero() || radicand.is_zero()) return out;
    ReducedRadical r = reduce_radical(radicand);
    out.add_term(coeff * r.multiplier, r.radicand);
    return out;
}

RadicalSum RadicalSum::from_terms(const std::vector<RadicalTerm>& terms) {
    RadicalSum out;
    for (const auto& t : terms) out += term(t.coeff, t.radicand);
    return out;
}

void RadicalSum::add_term(NuPolynomial coeff, const NuPolynomial& canonical_radicand) {
    if (coeff.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), canonical_radicand,
                               [](const RadicalTerm& t, const NuPolynomial& r) { return t.radicand < r; });
    if (it != terms_.end() && it->radicand == canonical_radicand) {
        it->coeff += coeff;
        if (it->coeff.is_zero()) terms_.erase(it);
        return;
    }
    terms_.insert(it, RadicalTerm{std::move(coeff), canonical_radicand});
}

std::optional<NuPolynomial> RadicalSum::as_polynomial() const {
    if (terms_.empty()) return NuPolynomial();
    if (terms_.size() == 1 && is_one(terms_.front().radicand)) return terms_.front().coeff;
    return std::nullopt;
}

bool RadicalSum::zero_test_conclusive() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const RadicalTerm& t) { return radicand_square_free(t.radicand); });
}

int RadicalSum::max_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max({d, t.coeff.degree(), t.radicand.degree()});
    return d;
}

RadicalSum RadicalSum::conj() const {
    RadicalSum out = *this;
    for (auto& t : out.terms_) t.coeff = t.coeff.conj();
    return out;
}

RadicalSum RadicalSum::at(const Rational& nu) const {
    RadicalSum out;
    for (const auto& t : terms_) out += term(NuPolynomial(t.coeff.eval(nu)), NuPolynomial(t.radicand.eval(nu)));
    return out;
}

std::complex<double> RadicalSum::eval(double nu, double tolerance) const {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& t : terms_) {
        double r = t.radicand.eval(nu).real();
        if (r < -tolerance) {
            std::ostringstream msg;
            msg << "radicand " << t.radicand.to_string() << " is negative (" << r << ") at nu = " << nu;
            throw NegativeRadicand(msg.str(), r);
        }
        r = std::max(r, 0.0);
        acc += t.coeff.eval(nu) * std::sqrt(r);
    }
    return acc;
}

std::string RadicalSum::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const auto& t = terms_[k];
        std::string piece;
        if (is_one(t.radicand)) {
            piece = t.coeff.to_string();
        } else {
            const std::string root = "sqrt(" + t.radicand.to_string() + ")";
            if (t.coeff == NuPolynomial(1)) {
                piece = root;
            } else if (t.coeff.coeffs().size() == 1 && t.coeff.is_real()) {
                piece = t.coeff.to_string() + "*" + root;
            } else {
                piece = "(" + t.coeff.to_string() + ")*" + root;
            }
        }
        if (k > 0) {
            if (piece.front() == '-') {
                out += " - " + piece.substr(1);
            } else {
                out += " + " + piece;
            }
        } else {
            out = piece;
        }
    }
    return out;
}

RadicalSum RadicalSum::operator-() const {
    RadicalSum out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

RadicalSum& RadicalSum::operator+=(const RadicalSum& o) {
    for (const auto& t : o.terms_) add_term(t.coeff, t.radicand);
    return *this;
}

RadicalSum& RadicalSum::operator-=(const RadicalSum& o) {
    for (const auto& t : o.terms_) add_term(-t.coeff, t.radicand);
    return *this;
}

RadicalSum operator*(const RadicalSum& a, const RadicalSum& b) {
    RadicalSum out;
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            NuPolynomial coeff = x.coeff * y.coeff;
            if (is_one(x.radicand)) {
                out.add_term(std::move(coeff), y.radicand);
            } else if (is_one(y.radicand)) {
                out.add_term(std::move(coeff), x.radicand);
            } else {
                ReducedRadical r = reduce_radical(x.radicand * y.radicand);
                out.add_term(coeff * r.multiplier, r.radicand);
            }
        }
    }
    return out;
}

RadicalSum& RadicalSum::operator*=(const RadicalSum& o) { return *this = *this * o; }

RadicalSum& RadicalSum::operator*=(const NuPolynomial& p) {
    if (p.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= p;
    return *this;
}

}  // namespace nuwigner
