#include "scamscope/bech32.hpp"

#include <algorithm>
#include <cctype>

namespace scamscope {

namespace {

const char* kCharset = "qpzry9x8gf2tvdw0s3jn54khce6mua7l";

int8_t charset_index(char c) {
    for (int8_t i = 0; i < 32; ++i)
        if (kCharset[i] == c) return i;
    return -1;
}

uint32_t polymod(const std::vector<uint8_t>& values) {
    static const uint32_t kGen[5] = {0x3b6a57b2, 0x26508e6d, 0x1ea119fa, 0x3d4233dd, 0x2a1462b3};
    uint32_t chk = 1;
    for (uint8_t v : values) {
        uint8_t top = chk >> 25;
        chk = (chk & 0x1ffffff) << 5 ^ v;
        for (int i = 0; i < 5; ++i)
            if ((top >> i) & 1) chk ^= kGen[i];
    }
    return chk;
}

std::vector<uint8_t> expand_hrp(const std::string& hrp) {
    std::vector<uint8_t> out;
    out.reserve(hrp.size() * 2 + 1);
    for (char c : hrp) out.push_back(static_cast<uint8_t>(c) >> 5);
    out.push_back(0);
    for (char c : hrp) out.push_back(static_cast<uint8_t>(c) & 31);
    return out;
}

// 5-bit groups to 8-bit bytes, no padding allowed on decode
bool convert_5_to_8(const std::vector<uint8_t>& in, std::vector<uint8_t>& out) {
    uint32_t acc = 0;
    int bits = 0;
    for (uint8_t v : in) {
        acc = (acc << 5) | v;
        bits += 5;
        if (bits >= 8) {
            bits -= 8;
            out.push_back(static_cast<uint8_t>((acc >> bits) & 0xFF));
        }
    }
    return bits < 5 && ((acc << (8 - bits)) & 0xFF) == 0;
}

} // namespace

Bech32Result bech32_decode_segwit(const std::string& addr, const std::string& expected_hrp) {
    Bech32Result r;
    if (addr.size() < 8 || addr.size() > 90) {
        r.status = Bech32Status::bad_format;
        return r;
    }
    bool has_lower = false, has_upper = false;
    for (unsigned char c : addr) {
        if (c < 33 || c > 126) {
            r.status = Bech32Status::bad_charset;
            return r;
        }
        if (std::islower(c)) has_lower = true;
        if (std::isupper(c)) has_upper = true;
    }
    if (has_lower && has_upper) {
        r.status = Bech32Status::mixed_case;
        return r;
    }
    std::string s = addr;
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });

    size_t sep = s.rfind('1');
    if (sep == std::string::npos || sep < 1 || sep + 7 > s.size()) {
        r.status = Bech32Status::bad_format;
        return r;
    }
    r.hrp = s.substr(0, sep);
    if (r.hrp != expected_hrp) {
        r.status = Bech32Status::bad_format;
        return r;
    }

    std::vector<uint8_t> values;
    for (size_t i = sep + 1; i < s.size(); ++i) {
        int8_t v = charset_index(s[i]);
        if (v < 0) {
            r.status = Bech32Status::bad_charset;
            return r;
        }
        values.push_back(static_cast<uint8_t>(v));
    }

    std::vector<uint8_t> check = expand_hrp(r.hrp);
    check.insert(check.end(), values.begin(), values.end());
    if (polymod(check) != 1) {
        r.status = Bech32Status::bad_checksum;
        return r;
    }

    // checksum ok; apply segwit witness rules (BIP-173)
    std::vector<uint8_t> data(values.begin(), values.end() - 6);
    if (data.empty()) {
        r.status = Bech32Status::bad_program;
        return r;
    }
    int version = data[0];
    std::vector<uint8_t> program;
    if (version > 16 ||
        !convert_5_to_8(std::vector<uint8_t>(data.begin() + 1, data.end()), program) ||
        program.size() < 2 || program.size() > 40 ||
        (version == 0 && program.size() != 20 && program.size() != 32)) {
        r.status = Bech32Status::bad_program;
        return r;
    }
    r.status = Bech32Status::ok;
    r.witness_version = version;
    r.program = std::move(program);
    return r;
}

} // namespace scamscope
