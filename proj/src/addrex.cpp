#include "scamscope/addrex.hpp"

#include "scamscope/base58.hpp"
#include "scamscope/bech32.hpp"
#include "scamscope/hash.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace scamscope {

namespace {

constexpr std::array<std::pair<Chain, std::string_view>, 6> kChainTags = {{
    {Chain::bitcoin, "bitcoin"},
    {Chain::ethereum, "ethereum"},
    {Chain::xrp, "xrp"},
    {Chain::tron, "tron"},
    {Chain::neo, "neo"},
    {Chain::binance_coin, "binance-coin"},
}};

// character class of the bitcoin extraction pattern: [a-zA-HJ-NP-Z0-9]
bool btc_body_char(char c) {
    if (c >= '0' && c <= '9') return true;
    if (c >= 'a' && c <= 'z') return true;
    if (c >= 'A' && c <= 'Z') return c != 'I' && c != 'O';
    return false;
}

bool hex_char(char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

// base58 body chars used by the xrp/tron/neo patterns: excludes 0OIl
bool base58_strict_char(char c) {
    if (c >= '1' && c <= '9') return true;
    if (c >= 'A' && c <= 'Z') return c != 'I' && c != 'O';
    if (c >= 'a' && c <= 'z') return c != 'l';
    return false;
}

bool bech32_data_char(char c) {
    static const std::string kCharset = "qpzry9x8gf2tvdw0s3jn54khce6mua7l";
    return kCharset.find(c) != std::string::npos;
}

size_t run_length(std::string_view text, size_t start, bool (*pred)(char)) {
    size_t i = start;
    while (i < text.size() && pred(text[i])) ++i;
    return i - start;
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

} // namespace

std::string_view chain_tag(Chain c) {
    for (const auto& [chain, tag] : kChainTags)
        if (chain == c) return tag;
    throw std::invalid_argument("unknown chain value");
}

Chain chain_from_tag(std::string_view tag) {
    for (const auto& [chain, t] : kChainTags)
        if (t == tag) return chain;
    throw std::invalid_argument("unknown chain tag: " + std::string(tag));
}

std::string_view validity_tag(Validity v) {
    switch (v) {
        case Validity::checksum_valid: return "checksum-valid";
        case Validity::format_valid_unverified: return "format-valid-unverified";
        case Validity::invalid: return "invalid";
    }
    throw std::invalid_argument("unknown validity value");
}

Validity validity_from_tag(std::string_view tag) {
    if (tag == "checksum-valid") return Validity::checksum_valid;
    if (tag == "format-valid-unverified") return Validity::format_valid_unverified;
    if (tag == "invalid") return Validity::invalid;
    throw std::invalid_argument("unknown validity tag: " + std::string(tag));
}

Base58CheckOutcome validate_base58check(const std::string& addr) {
    Base58CheckOutcome out;
    if (addr.empty()) {
        out.reason = "charset";
        return out;
    }
    Base58CheckResult r = base58check_decode(addr);
    switch (r.status) {
        case Base58CheckStatus::bad_charset: out.reason = "charset"; return out;
        case Base58CheckStatus::bad_length: out.reason = "length"; return out;
        case Base58CheckStatus::bad_checksum: out.reason = "checksum"; return out;
        case Base58CheckStatus::ok: break;
    }
    out.validity = Validity::checksum_valid;
    out.version = r.version;
    return out;
}

Bech32Outcome validate_bech32(const std::string& addr) {
    Bech32Outcome out;
    Bech32Result r = bech32_decode_segwit(addr, "bc");
    switch (r.status) {
        case Bech32Status::mixed_case: out.reason = "case"; return out;
        case Bech32Status::bad_charset: out.reason = "charset"; return out;
        case Bech32Status::bad_format: out.reason = "format"; return out;
        case Bech32Status::bad_checksum: out.reason = "checksum"; return out;
        case Bech32Status::bad_program: out.reason = "program"; return out;
        case Bech32Status::ok: break;
    }
    out.validity = Validity::checksum_valid;
    out.witness_version = r.witness_version;
    return out;
}

EthOutcome validate_eth(const std::string& addr) {
    EthOutcome out;
    if (addr.size() != 42 || addr[0] != '0' || addr[1] != 'x' ||
        !std::all_of(addr.begin() + 2, addr.end(), hex_char)) {
        out.reason = "format";
        return out;
    }
    std::string body = addr.substr(2);
    std::string lower = lowercase(body);
    std::string upper = body;
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    if (body == lower || body == upper) {
        out.validity = Validity::format_valid_unverified;
        return out;
    }
    // EIP-55: hash nibble >= 8 forces uppercase, otherwise lowercase
    auto digest = keccak256(lower);
    std::string hash_hex = hex_encode(digest.data(), digest.size());
    for (size_t i = 0; i < body.size(); ++i) {
        if (!std::isalpha(static_cast<unsigned char>(body[i]))) continue;
        bool want_upper = hash_hex[i] >= '8';
        if (want_upper != static_cast<bool>(std::isupper(static_cast<unsigned char>(body[i])))) {
            out.reason = "eip55";
            return out;
        }
    }
    out.validity = Validity::checksum_valid;
    return out;
}

ChainAddress classify_address(Chain chain, const std::string& raw) {
    ChainAddress a;
    a.chain = chain;
    a.raw = raw;
    a.normalized = raw;
    switch (chain) {
        case Chain::bitcoin: {
            if (lowercase(raw.substr(0, 3)) == "bc1") {
                Bech32Outcome o = validate_bech32(raw);
                a.validity = o.validity;
                a.reason = o.reason;
                a.normalized = lowercase(raw);
            } else {
                Base58CheckOutcome o = validate_base58check(raw);
                a.validity = o.validity;
                a.reason = o.reason;
            }
            break;
        }
        case Chain::ethereum: {
            EthOutcome o = validate_eth(raw);
            a.validity = o.validity;
            a.reason = o.reason;
            if (raw.size() >= 2) a.normalized = "0x" + lowercase(raw.substr(2));
            break;
        }
        default:
            a.validity = Validity::format_valid_unverified;
            break;
    }
    return a;
}

namespace {

struct Match {
    Chain chain;
    size_t pos = 0;
    size_t len = 0;
};

// Bitcoin pattern (bc1|[13])[a-zA-HJ-NP-Z0-9]{25,39} with the maximal-run
// extension policy, resolved to the raw string to report.
bool match_bitcoin(std::string_view text, size_t i, std::string& raw, size_t& len) {
    size_t prefix = 0;
    if (text.compare(i, 3, "bc1") == 0)
        prefix = 3;
    else if (text[i] == '1' || text[i] == '3')
        prefix = 1;
    else
        return false;
    size_t run = run_length(text, i + prefix, btc_body_char);
    if (run < 25) return false;
    size_t bounded = prefix + std::min<size_t>(run, 39);
    size_t maximal = prefix + run;
    if (maximal > bounded) {
        std::string extended(text.substr(i, maximal));
        ChainAddress probe = classify_address(Chain::bitcoin, extended);
        if (probe.validity == Validity::checksum_valid) {
            raw = std::move(extended);
            len = maximal;
            return true;
        }
    }
    raw = std::string(text.substr(i, bounded));
    len = bounded;
    return true;
}

bool match_ethereum(std::string_view text, size_t i, std::string& raw, size_t& len) {
    if (text[i] != '0' || i + 42 > text.size() || text[i + 1] != 'x') return false;
    for (size_t k = i + 2; k < i + 42; ++k)
        if (!hex_char(text[k])) return false;
    raw = std::string(text.substr(i, 42));
    len = 42;
    return true;
}

bool match_prefixed_base58(std::string_view text, size_t i, char prefix, size_t min_body,
                           size_t max_body, std::string& raw, size_t& len) {
    if (text[i] != prefix) return false;
    size_t run = run_length(text, i + 1, base58_strict_char);
    if (run < min_body) return false;
    len = 1 + std::min(run, max_body);
    raw = std::string(text.substr(i, len));
    return true;
}

bool match_bnb(std::string_view text, size_t i, std::string& raw, size_t& len) {
    if (text.compare(i, 4, "bnb1") != 0) return false;
    size_t run = run_length(text, i + 4, bech32_data_char);
    if (run < 38) return false;
    len = 4 + 38;
    raw = std::string(text.substr(i, len));
    return true;
}

} // namespace

std::vector<AddressObservation> scan_text(std::string_view text, const std::string& source_domain,
                                          const ScanOptions& options) {
    std::vector<AddressObservation> out;
    size_t pos = 0;
    while (pos < text.size()) {
        std::string raw;
        size_t len = 0;
        Chain chain{};
        bool found = false;

        for (size_t i = pos; i < text.size() && !found; ++i) {
            // try every chain at this position, keep the longest match
            std::string best_raw;
            size_t best_len = 0;
            Chain best_chain{};
            auto consider = [&](Chain c, std::string&& r, size_t l) {
                if (l > best_len) {
                    best_chain = c;
                    best_raw = std::move(r);
                    best_len = l;
                }
            };
            std::string r;
            size_t l = 0;
            if (match_bitcoin(text, i, r, l)) consider(Chain::bitcoin, std::move(r), l);
            if (match_ethereum(text, i, r, l)) consider(Chain::ethereum, std::move(r), l);
            if (options.extended_chains) {
                if (match_bnb(text, i, r, l)) consider(Chain::binance_coin, std::move(r), l);
                if (match_prefixed_base58(text, i, 'r', 24, 34, r, l))
                    consider(Chain::xrp, std::move(r), l);
                if (match_prefixed_base58(text, i, 'T', 33, 33, r, l))
                    consider(Chain::tron, std::move(r), l);
                if (match_prefixed_base58(text, i, 'A', 33, 33, r, l))
                    consider(Chain::neo, std::move(r), l);
            }
            if (best_len > 0) {
                chain = best_chain;
                raw = std::move(best_raw);
                len = best_len;
                pos = i;
                found = true;
            }
        }
        if (!found) break;

        AddressObservation obs;
        obs.address = classify_address(chain, raw);
        obs.source_domain = source_domain;
        obs.byte_offset = pos;
        out.push_back(std::move(obs));
        pos += len;
    }
    return out;
}

} // namespace scamscope
