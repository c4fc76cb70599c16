#include "scamscope/decimal.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace scamscope {

namespace {

Decimal::Int pow10(int n) {
    Decimal::Int r = 1;
    for (int i = 0; i < n; ++i) r *= 10;
    return r;
}

} // namespace

Decimal Decimal::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty decimal literal");
    size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    Int units = 0;
    int scale = 0;
    bool seen_digit = false, seen_dot = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("bad decimal literal: " + text);
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            units = units * 10 + (c - '0');
            if (seen_dot) ++scale;
            seen_digit = true;
        } else {
            throw std::invalid_argument("bad decimal literal: " + text);
        }
    }
    if (!seen_digit) throw std::invalid_argument("bad decimal literal: " + text);
    if (neg) units = -units;
    return Decimal(std::move(units), scale);
}

void Decimal::normalize() {
    while (scale_ > 0 && units_ % 10 == 0) {
        units_ /= 10;
        --scale_;
    }
}

Decimal Decimal::operator+(const Decimal& o) const {
    int scale = std::max(scale_, o.scale_);
    Int a = units_ * pow10(scale - scale_);
    Int b = o.units_ * pow10(scale - o.scale_);
    return Decimal(a + b, scale);
}

Decimal Decimal::operator-(const Decimal& o) const {
    int scale = std::max(scale_, o.scale_);
    Int a = units_ * pow10(scale - scale_);
    Int b = o.units_ * pow10(scale - o.scale_);
    return Decimal(a - b, scale);
}

Decimal Decimal::operator*(const Decimal& o) const {
    return Decimal(units_ * o.units_, scale_ + o.scale_);
}

bool Decimal::operator==(const Decimal& o) const {
    return scale_ == o.scale_ && units_ == o.units_; // both normalized
}

std::strong_ordering Decimal::operator<=>(const Decimal& o) const {
    int scale = std::max(scale_, o.scale_);
    Int a = units_ * pow10(scale - scale_);
    Int b = o.units_ * pow10(scale - o.scale_);
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Decimal Decimal::abs() const {
    return units_ < 0 ? Decimal(-units_, scale_) : *this;
}

std::string Decimal::str() const {
    Int mag = units_ < 0 ? Int(-units_) : units_;
    std::string digits = mag.str();
    if (static_cast<int>(digits.size()) <= scale_)
        digits.insert(0, scale_ - digits.size() + 1, '0');
    std::string out;
    if (units_ < 0) out += '-';
    out += digits.substr(0, digits.size() - scale_);
    if (scale_ > 0) {
        out += '.';
        out += digits.substr(digits.size() - scale_);
    }
    return out;
}

std::string Decimal::fixed(int digits) const {
    if (digits < 0) throw std::invalid_argument("negative digit count");
    if (scale_ <= digits) {
        std::string s = str();
        if (digits > 0) {
            size_t dot = s.find('.');
            int have = dot == std::string::npos ? 0 : static_cast<int>(s.size() - dot - 1);
            if (dot == std::string::npos) s += '.';
            s.append(digits - have, '0');
        }
        return s;
    }
    // Drop (scale_ - digits) trailing digits with half-even rounding.
    Int mag = units_ < 0 ? Int(-units_) : units_;
    Int div = pow10(scale_ - digits);
    Int q = mag / div;
    Int r = mag % div;
    Int half = div / 2;
    if (r > half || (r == half && q % 2 != 0)) ++q;
    Decimal rounded(units_ < 0 ? Int(-q) : q, digits);
    // normalize() may have trimmed zeros; re-pad through the <= branch
    return rounded.fixed(digits);
}

double Decimal::to_double() const {
    return std::stod(str());
}

} // namespace scamscope
