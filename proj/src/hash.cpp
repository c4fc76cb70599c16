#include "scamscope/hash.hpp"

#include <openssl/evp.h>

#include <cstring>

namespace scamscope {

std::array<uint8_t, 32> sha256(const uint8_t* data, size_t len) {
    std::array<uint8_t, 32> out{};
    unsigned int out_len = 0;
    EVP_Digest(data, len, out.data(), &out_len, EVP_sha256(), nullptr);
    return out;
}

std::array<uint8_t, 32> double_sha256(const uint8_t* data, size_t len) {
    auto first = sha256(data, len);
    return sha256(first.data(), first.size());
}

namespace {

constexpr uint64_t kRoundConstants[24] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL};

constexpr int kRotations[25] = {0,  1,  62, 28, 27, 36, 44, 6,  55, 20, 3,  10, 43,
                                25, 39, 41, 45, 15, 21, 8,  18, 2,  61, 56, 14};

inline uint64_t rotl(uint64_t x, int n) {
    return n == 0 ? x : (x << n) | (x >> (64 - n));
}

void keccak_f1600(uint64_t st[25]) {
    for (int round = 0; round < 24; ++round) {
        // theta
        uint64_t bc[5];
        for (int x = 0; x < 5; ++x)
            bc[x] = st[x] ^ st[x + 5] ^ st[x + 10] ^ st[x + 15] ^ st[x + 20];
        for (int x = 0; x < 5; ++x) {
            uint64_t d = bc[(x + 4) % 5] ^ rotl(bc[(x + 1) % 5], 1);
            for (int y = 0; y < 25; y += 5) st[x + y] ^= d;
        }
        // rho + pi
        uint64_t b[25];
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                b[y + 5 * ((2 * x + 3 * y) % 5)] = rotl(st[x + 5 * y], kRotations[x + 5 * y]);
        // chi
        for (int y = 0; y < 25; y += 5)
            for (int x = 0; x < 5; ++x)
                st[x + y] = b[x + y] ^ (~b[(x + 1) % 5 + y] & b[(x + 2) % 5 + y]);
        // iota
        st[0] ^= kRoundConstants[round];
    }
}

} // namespace

std::array<uint8_t, 32> keccak256(std::string_view data) {
    constexpr size_t kRate = 136;
    uint64_t st[25] = {0};
    uint8_t block[kRate];

    size_t offset = 0;
    while (data.size() - offset >= kRate) {
        std::memcpy(block, data.data() + offset, kRate);
        for (size_t i = 0; i < kRate / 8; ++i) {
            uint64_t lane = 0;
            for (int b = 7; b >= 0; --b) lane = (lane << 8) | block[i * 8 + b];
            st[i] ^= lane;
        }
        keccak_f1600(st);
        offset += kRate;
    }

    std::memset(block, 0, kRate);
    if (data.size() > offset) std::memcpy(block, data.data() + offset, data.size() - offset);
    block[data.size() - offset] = 0x01;
    block[kRate - 1] |= 0x80;
    for (size_t i = 0; i < kRate / 8; ++i) {
        uint64_t lane = 0;
        for (int b = 7; b >= 0; --b) lane = (lane << 8) | block[i * 8 + b];
        st[i] ^= lane;
    }
    keccak_f1600(st);

    std::array<uint8_t, 32> out{};
    for (int i = 0; i < 4; ++i)
        for (int b = 0; b < 8; ++b) out[i * 8 + b] = static_cast<uint8_t>(st[i] >> (8 * b));
    return out;
}

std::string hex_encode(const uint8_t* data, size_t len) {
    static const char* kHex = "0123456789abcdef";
    std::string out;
    out.reserve(len * 2);
    for (size_t i = 0; i < len; ++i) {
        out += kHex[data[i] >> 4];
        out += kHex[data[i] & 0x0F];
    }
    return out;
}

} // namespace scamscope
