#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace vat {

// Exact nonnegative rational kept in lowest terms.
//
// Products and cross-multiplications go through 128-bit intermediates; a
// result that does not fit back into 64 bits raises ErrorCode::Overflow
// rather than wrapping.
class Fraction {
public:
    constexpr Fraction() = default;
    Fraction(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_zero() const noexcept { return num_ == 0; }

    friend bool operator==(const Fraction&, const Fraction&) = default;
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

    friend Fraction operator+(const Fraction& a, const Fraction& b);
    friend Fraction operator*(const Fraction& a, const Fraction& b);
    friend Fraction operator/(const Fraction& a, const Fraction& b);

    Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
    Fraction& operator*=(const Fraction& o) { return *this = *this * o; }

    std::string to_string() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Fraction& f);

} // namespace vat
