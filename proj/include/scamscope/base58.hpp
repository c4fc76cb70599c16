#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace scamscope {

// Base58 with the Bitcoin alphabet (no 0, O, I, l). Returns false on any
// out-of-alphabet character.
bool base58_decode(const std::string& s, std::vector<uint8_t>& out);

enum class Base58CheckStatus { ok, bad_charset, bad_length, bad_checksum };

struct Base58CheckResult {
    Base58CheckStatus status = Base58CheckStatus::bad_charset;
    int version = -1;                // payload version byte when status == ok
    std::vector<uint8_t> payload;    // version + body, checksum stripped
};

// Base58Check: decoded data must be 25 bytes, last 4 equal to the first 4
// bytes of double-SHA256 over the preceding 21.
Base58CheckResult base58check_decode(const std::string& s);

} // namespace scamscope
