#include <random>

#include "doctest.h"
#include "nuwigner/nu_polynomial.hpp"

using nuwigner::GaussianRational;
using nuwigner::NuPolynomial;
using nuwigner::Rational;

namespace {

NuPolynomial random_poly(std::mt19937_64& rng, int max_degree = 4) {
    std::uniform_int_distribution<int> deg(-1, max_degree);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<GaussianRational> c;
    const int d = deg(rng);
    for (int k = 0; k <= d; ++k) c.emplace_back(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    return NuPolynomial(c);
}

}  // namespace

TEST_CASE("construction trims trailing zeros") {
    CHECK(NuPolynomial{1, 2, 0, 0}.degree() == 1);
    CHECK(NuPolynomial{0, 0}.is_zero());
    CHECK(NuPolynomial().degree() == -1);
    CHECK(NuPolynomial::nu() == NuPolynomial{0, 1});
    CHECK(NuPolynomial::monomial(GaussianRational(3), 2) == NuPolynomial{0, 0, 3});
}

TEST_CASE("to_string") {
    CHECK(NuPolynomial{1, 2}.to_string() == "1 + 2*nu");
    CHECK(NuPolynomial{0, -1, 4}.to_string() == "-nu + 4*nu^2");
    CHECK(NuPolynomial().to_string() == "0");
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(3);
    const std::vector<Rational> points{Rational(0), Rational(1, 3), Rational(-2, 5), Rational(7)};
    for (int i = 0; i < 100; ++i) {
        const NuPolynomial p = random_poly(rng);
        const NuPolynomial q = random_poly(rng);
        for (const auto& x : points) {
            CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
            CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
        }
        CHECK(p * q == q * p);
        CHECK(p * (q + p) == p * q + p * p);
    }
}

TEST_CASE("shift and derivative") {
    const NuPolynomial p{1, 2, 3};  // 1 + 2nu + 3nu^2
    CHECK(p.derivative() == NuPolynomial{2, 6});
    // p(nu + 1) = 6 + 8nu + 3nu^2
    CHECK(p.shifted(Rational(1)) == NuPolynomial{6, 8, 3});
    CHECK(p.eval(0.5) == std::complex<double>(2.75, 0.0));
}

TEST_CASE("division and gcd") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const NuPolynomial a = random_poly(rng);
        NuPolynomial b = random_poly(rng);
        if (b.is_zero()) b = NuPolynomial{1, 1};
        const auto [q, r] = nuwigner::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        CHECK(nuwigner::exact_div(a * b, b) == a);
    }
    const NuPolynomial f{1, 2};
    const NuPolynomial g = f * NuPolynomial{3, 1};
    const NuPolynomial h = f * NuPolynomial{-1, 5};
    CHECK(nuwigner::gcd(g, h) == NuPolynomial(std::vector<GaussianRational>{Rational(1, 2), Rational(1)}));
    CHECK_THROWS(nuwigner::exact_div(NuPolynomial{1, 0, 1}, NuPolynomial{0, 1}));
}
