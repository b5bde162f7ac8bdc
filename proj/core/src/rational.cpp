#include "nuwigner/rational.hpp"

#include "nuwigner/errors.hpp"

namespace nuwigner {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw Error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational Rational::parse(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("not a rational number: '" + text + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(std::move(q));
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) return re_.to_string();
    const std::string imag = (im_ == Rational(1)) ? "i" : (im_ == Rational(-1) ? "-i" : im_.to_string() + "i");
    if (re_.is_zero()) return imag;
    return "(" + re_.to_string() + (im_.sign() > 0 ? "+" : "") + imag + ")";
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw Error("GaussianRational: division by zero");
    const Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
    *this *= o.conj();
    re_ /= norm;
    im_ /= norm;
    return *this;
}

}  // namespace nuwigner
