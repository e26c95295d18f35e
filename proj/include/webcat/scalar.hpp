#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>

namespace webcat {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Exact rational scalar. Always reduced, positive denominator.
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) {}
    Scalar(const BigInt& n) : v_(n) {}
    Scalar(long num, long den) : v_(BigRat(num, den)) {}
    Scalar(const BigInt& num, const BigInt& den) : v_(BigRat(num, den)) {}
    explicit Scalar(const BigRat& v) : v_(v) {}

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return boost::multiprecision::denominator(v_) == 1; }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    Scalar operator-() const { return Scalar(BigRat(-v_)); }
    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o) { v_ /= o.v_; return *this; }

    friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
    friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
    friend Scalar operator*(Scalar a, const Scalar& b) { a *= b; return a; }
    friend Scalar operator/(Scalar a, const Scalar& b) { a /= b; return a; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

    Scalar inverse() const;

    /// "p/q", with "/q" omitted when q == 1.
    std::string str() const;

    /// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument.
    static Scalar parse(const std::string& s);

private:
    BigRat v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Generalized binomial coefficient n(n-1)...(n-k+1)/k!, any integer n, k >= 0.
Scalar binom(long n, long k);

/// k! as an exact scalar, k >= 0.
Scalar factorial(long k);

/// (2k-1)!! double factorial of an odd number; odd_double_factorial(-1) = 1.
BigInt odd_double_factorial(long m);

}  // namespace webcat
