#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace scamscope {

enum class Bech32Status { ok, mixed_case, bad_charset, bad_format, bad_checksum, bad_program };

struct Bech32Result {
    Bech32Status status = Bech32Status::bad_format;
    std::string hrp;
    int witness_version = -1;
    std::vector<uint8_t> program; // converted 8-bit witness program
};

// Full BIP-173 segwit address verification: case rule, charset, polymod
// checksum (constant 1), witness version 0..16 and program size rules.
// expected_hrp is matched after lowercasing.
Bech32Result bech32_decode_segwit(const std::string& addr, const std::string& expected_hrp = "bc");

} // namespace scamscope
