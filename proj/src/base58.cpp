#include "scamscope/base58.hpp"

#include "scamscope/hash.hpp"

#include <cstring>

namespace scamscope {

namespace {

const char* kAlphabet = "123456789ABCDEFGHJKLMNPQRSTUVWXYZabcdefghijkmnopqrstuvwxyz";

int8_t alphabet_index(char c) {
    const char* p = std::strchr(kAlphabet, c);
    return (p && c != '\0') ? static_cast<int8_t>(p - kAlphabet) : -1;
}

} // namespace

bool base58_decode(const std::string& s, std::vector<uint8_t>& out) {
    out.clear();
    if (s.empty()) return false;
    size_t zeroes = 0;
    while (zeroes < s.size() && s[zeroes] == '1') ++zeroes;

    // big-endian base256 accumulator, log(58)/log(256) rounded up
    std::vector<uint8_t> b256(s.size() * 733 / 1000 + 1, 0);
    size_t length = 0;
    for (char c : s) {
        int carry = alphabet_index(c);
        if (carry < 0) return false;
        size_t i = 0;
        for (auto it = b256.rbegin(); (carry != 0 || i < length) && it != b256.rend(); ++it, ++i) {
            carry += 58 * (*it);
            *it = static_cast<uint8_t>(carry % 256);
            carry /= 256;
        }
        length = i;
    }
    auto it = b256.begin() + (b256.size() - length);
    out.assign(zeroes, 0x00);
    out.insert(out.end(), it, b256.end());
    return true;
}

Base58CheckResult base58check_decode(const std::string& s) {
    Base58CheckResult r;
    std::vector<uint8_t> raw;
    if (!base58_decode(s, raw)) {
        r.status = Base58CheckStatus::bad_charset;
        return r;
    }
    if (raw.size() != 25) {
        r.status = Base58CheckStatus::bad_length;
        return r;
    }
    auto digest = double_sha256(raw.data(), raw.size() - 4);
    if (std::memcmp(digest.data(), raw.data() + raw.size() - 4, 4) != 0) {
        r.status = Base58CheckStatus::bad_checksum;
        return r;
    }
    r.status = Base58CheckStatus::ok;
    r.version = raw[0];
    r.payload.assign(raw.begin(), raw.end() - 4);
    return r;
}

} // namespace scamscope
