#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace scamscope {

enum class Chain { bitcoin, ethereum, xrp, tron, neo, binance_coin };

std::string_view chain_tag(Chain c);              // "bitcoin", "binance-coin", ...
Chain chain_from_tag(std::string_view tag);       // throws std::invalid_argument

enum class Validity { checksum_valid, format_valid_unverified, invalid };

std::string_view validity_tag(Validity v);
Validity validity_from_tag(std::string_view tag);

struct ChainAddress {
    Chain chain = Chain::bitcoin;
    std::string raw;        // as found in the text
    std::string normalized; // ethereum: lowercase hex; bech32: lowercase
    Validity validity = Validity::invalid;
    std::string reason;     // charset | checksum | length | case | eip55 | format, empty when valid
};

struct AddressObservation {
    ChainAddress address;
    std::string source_domain;
    size_t byte_offset = 0;
};

struct ScanOptions {
    // XRP/Tron/NEO/Binance-Coin pattern-only detection (always
    // format-valid-unverified; no checksum support).
    bool extended_chains = false;
};

// Scans text for chain address patterns: leftmost match first, longest on
// ties, non-overlapping. Bitcoin matches embedded in a longer base58-like
// run are first extended to the maximal run; if that fails validation the
// regex-bounded window is validated instead.
std::vector<AddressObservation> scan_text(std::string_view text, const std::string& source_domain,
                                          const ScanOptions& options = {});

struct Base58CheckOutcome {
    Validity validity = Validity::invalid;
    std::string reason;
    int version = -1; // 0x00 for '1...', 0x05 for '3...'
};
Base58CheckOutcome validate_base58check(const std::string& addr);

struct Bech32Outcome {
    Validity validity = Validity::invalid;
    std::string reason;
    int witness_version = -1;
};
Bech32Outcome validate_bech32(const std::string& addr);

struct EthOutcome {
    Validity validity = Validity::invalid;
    std::string reason;
};
// All-lowercase or all-uppercase hex bodies carry no checksum and pass as
// format-valid-unverified; mixed case must satisfy EIP-55.
EthOutcome validate_eth(const std::string& addr);

// Full classification used by scan_text: routes to the validator matching
// the address shape.
ChainAddress classify_address(Chain chain, const std::string& raw);

} // namespace scamscope
