#include "webcat/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace webcat {

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    return Scalar(BigRat(1) / v_);
}

std::string Scalar::str() const {
    std::string out = numerator().str();
    if (!is_integer()) {
        out += "/";
        out += denominator().str();
    }
    return out;
}

Scalar Scalar::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Scalar(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Scalar(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("Scalar: cannot parse '" + s + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar binom(long n, long k) {
    if (k < 0) throw std::invalid_argument("binom: k must be nonnegative");
    BigInt num = 1;
    for (long i = 0; i < k; ++i) num *= BigInt(n - i);
    BigInt den = 1;
    for (long i = 2; i <= k; ++i) den *= i;
    return Scalar(num, den);
}

Scalar factorial(long k) {
    if (k < 0) throw std::invalid_argument("factorial: k must be nonnegative");
    BigInt out = 1;
    for (long i = 2; i <= k; ++i) out *= i;
    return Scalar(out);
}

BigInt odd_double_factorial(long m) {
    BigInt out = 1;
    for (long i = m; i > 1; i -= 2) out *= i;
    return out;
}

}  // namespace webcat
