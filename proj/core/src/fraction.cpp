#include "vat/fraction.hpp"

#include <limits>
#include <numeric>

#include "vat/error.hpp"
#include "wide_int.hpp"

namespace vat {
namespace {

using wide = detail::int128;

std::int64_t narrow(wide x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < 0)
        throw Error(ErrorCode::Overflow, "fraction component out of 64-bit range");
    return static_cast<std::int64_t>(x);
}

wide gcd_wide(wide a, wide b) {
    while (b != 0) {
        wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Fraction reduce(wide num, wide den) {
    wide g = gcd_wide(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Fraction(narrow(num), narrow(den));
}

} // namespace

Fraction::Fraction(std::int64_t num, std::int64_t den) {
    if (den <= 0)
        throw Error(ErrorCode::BadParameter, "fraction denominator must be positive");
    if (num < 0)
        throw Error(ErrorCode::BadParameter, "fraction must be nonnegative");
    std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    wide lhs = static_cast<wide>(a.num_) * b.den_;
    wide rhs = static_cast<wide>(b.num_) * a.den_;
    return lhs <=> rhs;
}

Fraction operator+(const Fraction& a, const Fraction& b) {
    return reduce(static_cast<wide>(a.num_) * b.den_ + static_cast<wide>(b.num_) * a.den_,
                  static_cast<wide>(a.den_) * b.den_);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
    return reduce(static_cast<wide>(a.num_) * b.num_, static_cast<wide>(a.den_) * b.den_);
}

Fraction operator/(const Fraction& a, const Fraction& b) {
    if (b.num_ == 0)
        throw Error(ErrorCode::BadParameter, "division by zero fraction");
    return reduce(static_cast<wide>(a.num_) * b.den_, static_cast<wide>(a.den_) * b.num_);
}

std::string Fraction::to_string() const {
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.to_string(); }

} // namespace vat
