#include <random>

#include "doctest.h"
#include "nuwigner/errors.hpp"
#include "nuwigner/rational.hpp"

using nuwigner::GaussianRational;
using nuwigner::Rational;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 12);
    return Rational(num(rng), den(rng));
}

GaussianRational random_gaussian(std::mt19937_64& rng) { return {random_rational(rng), random_rational(rng)}; }

}  // namespace

TEST_CASE("rational normalizes sign and common factors") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).num() == -3);
    CHECK(Rational(6, -4).den() == 2);
    CHECK(Rational(0, 5).is_zero());
    CHECK(Rational(4, 2).is_integer());
    CHECK(Rational(-7, 3).sign() == -1);
}

TEST_CASE("rational parse and print") {
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("17") == Rational(17));
    CHECK(Rational(5, 10).to_string() == "1/2");
    CHECK_THROWS_AS(Rational::parse("abc"), nuwigner::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), nuwigner::ParseError);
}

TEST_CASE("rational arithmetic against double") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        CHECK((a + b).to_double() == doctest::Approx(a.to_double() + b.to_double()));
        CHECK((a * b).to_double() == doctest::Approx(a.to_double() * b.to_double()));
        if (!b.is_zero()) CHECK((a / b).to_double() == doctest::Approx(a.to_double() / b.to_double()));
        CHECK(((a < b) == (a.to_double() < b.to_double())));
    }
}

TEST_CASE("gaussian rationals form a field") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const GaussianRational a = random_gaussian(rng);
        const GaussianRational b = random_gaussian(rng);
        const GaussianRational c = random_gaussian(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == GaussianRational());
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
    }
}

TEST_CASE("imaginary unit") {
    const GaussianRational i = GaussianRational::i();
    CHECK(i * i == GaussianRational(-1));
    CHECK(i.to_complex() == std::complex<double>(0.0, 1.0));
    CHECK(GaussianRational(Rational(1, 2), Rational(-3)).to_complex() == std::complex<double>(0.5, -3.0));
}
