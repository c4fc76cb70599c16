#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace scamscope {

std::array<uint8_t, 32> sha256(const uint8_t* data, size_t len);
std::array<uint8_t, 32> double_sha256(const uint8_t* data, size_t len);

// Keccak-256 with the original 0x01 padding (the Ethereum variant), which
// differs from FIPS-202 SHA3-256.
std::array<uint8_t, 32> keccak256(std::string_view data);

std::string hex_encode(const uint8_t* data, size_t len);

} // namespace scamscope
