#include "seshadri/quad_scalar.hpp"

#include "seshadri/errors.hpp"

#include <cmath>
#include <ostream>

namespace seshadri {

int sign(const Integer& x) { return sgn(x); }
int sign(const Rational& x) { return sgn(x); }

Integer isqrt(const Integer& k) {
    if (k < 0) throw PreconditionError("isqrt of a negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), k.get_mpz_t());
    return r;
}

bool is_square(const Integer& k) {
    return k >= 0 && mpz_perfect_square_p(k.get_mpz_t()) != 0;
}

std::string to_string(const Rational& x) {
    Rational q = x;
    q.canonicalize();
    return q.get_str();
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    q.canonicalize();
    return q;
}

QuadScalar::QuadScalar(Rational a, Rational b, Integer n)
    : a_(std::move(a)), b_(std::move(b)), n_(std::move(n)) {
    if (n_ < 0) throw PreconditionError("negative radicand");
    canonicalize();
}

QuadScalar QuadScalar::sqrt(const Integer& k) { return QuadScalar(0, 1, k); }

void QuadScalar::canonicalize() {
    if (a_.get_den() == 0 || b_.get_den() == 0) throw PreconditionError("zero denominator");
    a_.canonicalize();
    b_.canonicalize();
    if (b_ == 0 || n_ == 0) {
        b_ = 0;
        n_ = 0;
        return;
    }
    if (is_square(n_)) {
        a_ += b_ * Rational(isqrt(n_));
        b_ = 0;
        n_ = 0;
    }
}

Integer QuadScalar::common_radicand(const QuadScalar& x, const QuadScalar& y) {
    if (x.n_ == 0) return y.n_;
    if (y.n_ == 0 || x.n_ == y.n_) return x.n_;
    throw RadicandMismatch("radicands " + x.n_.get_str() + " and " + y.n_.get_str() + " cannot be combined");
}

int QuadScalar::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // a and b√n have opposite signs: the larger magnitude wins.
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * Rational(n_);
    if (lhs > rhs) return sa;
    if (lhs < rhs) return sb;
    return 0;
}

double QuadScalar::approx() const {
    return a_.get_d() + b_.get_d() * std::sqrt(n_.get_d());
}

std::string QuadScalar::to_string() const {
    if (is_rational()) return seshadri::to_string(a_);
    std::string irr;
    const Rational mag = abs(b_);
    if (mag == 1)
        irr = "sqrt(" + n_.get_str() + ")";
    else if (mag.get_den() == 1)
        irr = mag.get_str() + "*sqrt(" + n_.get_str() + ")";
    else
        irr = "(" + mag.get_str() + ")*sqrt(" + n_.get_str() + ")";
    if (a_ == 0) return (b_ < 0 ? "-" : "") + irr;
    return seshadri::to_string(a_) + (b_ < 0 ? " - " : " + ") + irr;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& rhs) {
    n_ = common_radicand(*this, rhs);
    a_ += rhs.a_;
    b_ += rhs.b_;
    canonicalize();
    return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& rhs) {
    n_ = common_radicand(*this, rhs);
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    canonicalize();
    return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& rhs) {
    const Integer n = common_radicand(*this, rhs);
    const Rational a = a_ * rhs.a_ + b_ * rhs.b_ * Rational(n);
    const Rational b = a_ * rhs.b_ + b_ * rhs.a_;
    a_ = a;
    b_ = b;
    n_ = n;
    canonicalize();
    return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& rhs) {
    if (rhs.sign() == 0) throw std::domain_error("QuadScalar division by zero");
    // 1/(c + d√n) = (c - d√n) / (c² - d²n); the denominator is nonzero for nonsquare n.
    const Rational norm = rhs.a_ * rhs.a_ - rhs.b_ * rhs.b_ * Rational(rhs.n_);
    const QuadScalar conj(rhs.a_ / norm, -rhs.b_ / norm, rhs.n_);
    return *this *= conj;
}

QuadScalar QuadScalar::operator-() const {
    QuadScalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

std::strong_ordering operator<=>(const QuadScalar& x, const QuadScalar& y) {
    const int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& x) { return os << x.to_string(); }

}  // namespace seshadri
