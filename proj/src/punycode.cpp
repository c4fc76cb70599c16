#include "scamscope/punycode.hpp"

#include <limits>

namespace scamscope {

namespace {

constexpr uint32_t kBase = 36;
constexpr uint32_t kTmin = 1;
constexpr uint32_t kTmax = 26;
constexpr uint32_t kSkew = 38;
constexpr uint32_t kDamp = 700;
constexpr uint32_t kInitialBias = 72;
constexpr uint32_t kInitialN = 128;

uint32_t adapt(uint32_t delta, uint32_t numpoints, bool firsttime) {
    delta = firsttime ? delta / kDamp : delta / 2;
    delta += delta / numpoints;
    uint32_t k = 0;
    while (delta > ((kBase - kTmin) * kTmax) / 2) {
        delta /= kBase - kTmin;
        k += kBase;
    }
    return k + ((kBase - kTmin + 1) * delta) / (delta + kSkew);
}

char encode_digit(uint32_t d) {
    return d < 26 ? static_cast<char>('a' + d) : static_cast<char>('0' + d - 26);
}

int decode_digit(char c) {
    if (c >= 'a' && c <= 'z') return c - 'a';
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= '0' && c <= '9') return c - '0' + 26;
    return -1;
}

} // namespace

std::vector<uint32_t> utf8_decode(const std::string& s) {
    std::vector<uint32_t> out;
    size_t i = 0;
    while (i < s.size()) {
        unsigned char b = s[i];
        uint32_t cp;
        int len;
        if (b < 0x80) {
            cp = b;
            len = 1;
        } else if ((b & 0xE0) == 0xC0) {
            cp = b & 0x1F;
            len = 2;
        } else if ((b & 0xF0) == 0xE0) {
            cp = b & 0x0F;
            len = 3;
        } else if ((b & 0xF8) == 0xF0) {
            cp = b & 0x07;
            len = 4;
        } else {
            throw IdnError("invalid utf-8 byte");
        }
        if (i + len > s.size()) throw IdnError("truncated utf-8 sequence");
        for (int k = 1; k < len; ++k) {
            unsigned char c = s[i + k];
            if ((c & 0xC0) != 0x80) throw IdnError("invalid utf-8 continuation");
            cp = (cp << 6) | (c & 0x3F);
        }
        static const uint32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
        if (cp < kMin[len]) throw IdnError("overlong utf-8 sequence");
        if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
            throw IdnError("utf-8 code point out of range");
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string utf8_encode(const std::vector<uint32_t>& cps) {
    std::string out;
    for (uint32_t cp : cps) {
        if (cp < 0x80) {
            out += static_cast<char>(cp);
        } else if (cp < 0x800) {
            out += static_cast<char>(0xC0 | (cp >> 6));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else if (cp < 0x10000) {
            out += static_cast<char>(0xE0 | (cp >> 12));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else {
            out += static_cast<char>(0xF0 | (cp >> 18));
            out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        }
    }
    return out;
}

std::string punycode_encode(const std::vector<uint32_t>& input) {
    std::string out;
    for (uint32_t cp : input)
        if (cp < 0x80) out += static_cast<char>(cp);
    uint32_t b = static_cast<uint32_t>(out.size());
    uint32_t h = b;
    if (b > 0) out += '-';

    uint32_t n = kInitialN;
    uint32_t delta = 0;
    uint32_t bias = kInitialBias;
    const uint32_t kMaxDelta = std::numeric_limits<uint32_t>::max();

    while (h < input.size()) {
        uint32_t m = 0x110000;
        for (uint32_t cp : input)
            if (cp >= n && cp < m) m = cp;
        if (m - n > (kMaxDelta - delta) / (h + 1)) throw IdnError("punycode overflow");
        delta += (m - n) * (h + 1);
        n = m;
        for (uint32_t cp : input) {
            if (cp < n && ++delta == 0) throw IdnError("punycode overflow");
            if (cp == n) {
                uint32_t q = delta;
                for (uint32_t k = kBase;; k += kBase) {
                    uint32_t t = k <= bias ? kTmin : (k >= bias + kTmax ? kTmax : k - bias);
                    if (q < t) break;
                    out += encode_digit(t + (q - t) % (kBase - t));
                    q = (q - t) / (kBase - t);
                }
                out += encode_digit(q);
                bias = adapt(delta, h + 1, h == b);
                delta = 0;
                ++h;
            }
        }
        ++delta;
        ++n;
    }
    return out;
}

std::vector<uint32_t> punycode_decode(const std::string& input) {
    std::vector<uint32_t> out;
    size_t in = 0;
    size_t last_delim = input.rfind('-');
    if (last_delim != std::string::npos) {
        for (size_t i = 0; i < last_delim; ++i) {
            unsigned char c = input[i];
            if (c >= 0x80) throw IdnError("punycode basic part is not ascii");
            out.push_back(c);
        }
        in = last_delim + 1;
    }

    uint32_t n = kInitialN;
    uint32_t i = 0;
    uint32_t bias = kInitialBias;
    while (in < input.size()) {
        uint32_t oldi = i;
        uint32_t w = 1;
        for (uint32_t k = kBase;; k += kBase) {
            if (in >= input.size()) throw IdnError("truncated punycode");
            int digit = decode_digit(input[in++]);
            if (digit < 0) throw IdnError("invalid punycode digit");
            if (static_cast<uint32_t>(digit) > (std::numeric_limits<uint32_t>::max() - i) / w)
                throw IdnError("punycode overflow");
            i += digit * w;
            uint32_t t = k <= bias ? kTmin : (k >= bias + kTmax ? kTmax : k - bias);
            if (static_cast<uint32_t>(digit) < t) break;
            if (w > std::numeric_limits<uint32_t>::max() / (kBase - t))
                throw IdnError("punycode overflow");
            w *= kBase - t;
        }
        uint32_t len = static_cast<uint32_t>(out.size()) + 1;
        bias = adapt(i - oldi, len, oldi == 0);
        n += i / len;
        if (n > 0x10FFFF) throw IdnError("punycode code point out of range");
        i %= len;
        out.insert(out.begin() + i, n);
        ++i;
    }
    return out;
}

namespace {

std::vector<std::string> split_labels(const std::string& domain) {
    std::vector<std::string> labels;
    size_t start = 0;
    while (true) {
        size_t dot = domain.find('.', start);
        if (dot == std::string::npos) {
            labels.push_back(domain.substr(start));
            break;
        }
        labels.push_back(domain.substr(start, dot - start));
        start = dot + 1;
    }
    return labels;
}

bool is_ascii(const std::string& s) {
    for (unsigned char c : s)
        if (c >= 0x80) return false;
    return true;
}

} // namespace

std::string encode_idn(const std::string& unicode_domain) {
    std::string out;
    for (const std::string& label : split_labels(unicode_domain)) {
        if (label.empty()) throw IdnError("empty label in '" + unicode_domain + "'");
        if (!out.empty()) out += '.';
        if (is_ascii(label)) {
            out += label;
            continue;
        }
        try {
            out += "xn--" + punycode_encode(utf8_decode(label));
        } catch (const IdnError& e) {
            throw IdnError("label '" + label + "': " + e.what());
        }
    }
    return out;
}

std::string decode_idn(const std::string& ascii_domain) {
    std::string out;
    for (const std::string& label : split_labels(ascii_domain)) {
        if (label.empty()) throw IdnError("empty label in '" + ascii_domain + "'");
        if (!out.empty()) out += '.';
        if (label.rfind("xn--", 0) == 0) {
            try {
                std::vector<uint32_t> cps = punycode_decode(label.substr(4));
                if (cps.empty()) throw IdnError("decodes to an empty label");
                out += utf8_encode(cps);
            } catch (const IdnError& e) {
                throw IdnError("label '" + label + "': " + e.what());
            }
        } else {
            out += label;
        }
    }
    return out;
}

} // namespace scamscope
