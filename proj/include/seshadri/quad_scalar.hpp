#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace seshadri {

using Integer = mpz_class;
using Rational = mpq_class;

int sign(const Integer& x);
int sign(const Rational& x);

/// Floor of the square root of a nonnegative integer.
Integer isqrt(const Integer& k);
bool is_square(const Integer& k);

/// "p" or "p/q" in lowest terms.
std::string to_string(const Rational& x);
Rational parse_rational(const std::string& text);

/**
 * Exact element a + b·√n of a real quadratic field.
 *
 * Canonical form: when b = 0 or n is a perfect square the value is folded
 * into a and stored with b = 0, n = 0. Binary operations on two irrational
 * operands require the same radicand and throw RadicandMismatch otherwise;
 * a rational operand adopts the radicand of the other side.
 *
 * Ordering is decided without floating point: the sign of a + b√n is read
 * off from the signs of a and b, falling back to comparing a² with b²·n
 * when they disagree.
 */
class QuadScalar {
public:
    QuadScalar() = default;
    QuadScalar(int a) : a_(a) {}
    QuadScalar(const Integer& a) : a_(a) {}
    QuadScalar(const Rational& a) : a_(a) { canonicalize(); }
    /// Fractions need not be in lowest terms; they are reduced here.
    QuadScalar(Rational a, Rational b, Integer n);

    /// √k, collapsed to an integer when k is a perfect square.
    static QuadScalar sqrt(const Integer& k);

    const Rational& rational_part() const { return a_; }
    const Rational& irrational_part() const { return b_; }
    const Integer& radicand() const { return n_; }
    bool is_rational() const { return b_ == 0; }

    int sign() const;
    double approx() const;
    std::string to_string() const;

    QuadScalar& operator+=(const QuadScalar& rhs);
    QuadScalar& operator-=(const QuadScalar& rhs);
    QuadScalar& operator*=(const QuadScalar& rhs);
    QuadScalar& operator/=(const QuadScalar& rhs);

    friend QuadScalar operator+(QuadScalar lhs, const QuadScalar& rhs) { return lhs += rhs; }
    friend QuadScalar operator-(QuadScalar lhs, const QuadScalar& rhs) { return lhs -= rhs; }
    friend QuadScalar operator*(QuadScalar lhs, const QuadScalar& rhs) { return lhs *= rhs; }
    friend QuadScalar operator/(QuadScalar lhs, const QuadScalar& rhs) { return lhs /= rhs; }
    QuadScalar operator-() const;

    friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.n_ == y.n_;
    }
    friend std::strong_ordering operator<=>(const QuadScalar& x, const QuadScalar& y);

private:
    void canonicalize();
    static Integer common_radicand(const QuadScalar& x, const QuadScalar& y);

    Rational a_{0};
    Rational b_{0};
    Integer n_{0};
};

inline int sign(const QuadScalar& x) { return x.sign(); }
std::ostream& operator<<(std::ostream& os, const QuadScalar& x);

}  // namespace seshadri
