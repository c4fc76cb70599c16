#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

namespace scamscope {

// Exact decimal number, stored as units * 10^-scale with an arbitrary
// precision integer. Addition and multiplication never round; rounding
// happens only in fixed(), explicitly, half-even. Monetary totals go
// through this type so that sums are reproducible bit for bit.
class Decimal {
public:
    using Int = boost::multiprecision::cpp_int;

    Decimal() = default;
    Decimal(long long v) : units_(v) {}

    // Accepts [+-]digits[.digits]. Throws std::invalid_argument otherwise.
    static Decimal parse(const std::string& text);

    Decimal operator+(const Decimal& o) const;
    Decimal operator-(const Decimal& o) const;
    Decimal operator*(const Decimal& o) const;
    Decimal& operator+=(const Decimal& o) { return *this = *this + o; }

    bool operator==(const Decimal& o) const;
    std::strong_ordering operator<=>(const Decimal& o) const;

    bool is_zero() const { return units_ == 0; }
    bool negative() const { return units_ < 0; }
    Decimal abs() const;

    // Exact representation, no exponent, trailing fraction zeros trimmed.
    std::string str() const;

    // Rounded to `digits` fractional digits (half-even), zero padded.
    std::string fixed(int digits) const;

    // For tolerance checks and plotting only; totals never run through this.
    double to_double() const;

private:
    Decimal(Int units, int scale) : units_(std::move(units)), scale_(scale) { normalize(); }
    void normalize();

    Int units_ = 0;
    int scale_ = 0; // count of fractional digits, >= 0
};

} // namespace scamscope
