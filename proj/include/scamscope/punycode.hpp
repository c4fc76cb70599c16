#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace scamscope {

class IdnError : public std::runtime_error {
public:
    explicit IdnError(const std::string& what) : std::runtime_error(what) {}
};

// Strict UTF-8 <-> code point conversion. Rejects overlong forms,
// surrogates and values above U+10FFFF.
std::vector<uint32_t> utf8_decode(const std::string& s); // throws IdnError
std::string utf8_encode(const std::vector<uint32_t>& cps);

// RFC 3492 Punycode over raw code points. No IDNA mapping or case folding
// is applied; callers pass already lowercased labels.
std::string punycode_encode(const std::vector<uint32_t>& input);
std::vector<uint32_t> punycode_decode(const std::string& input);

// Per-label A-label conversion: every label containing a non-ASCII code
// point becomes "xn--" + punycode. Pure ASCII domains pass through
// unchanged. Errors name the offending label.
std::string encode_idn(const std::string& unicode_domain);
std::string decode_idn(const std::string& ascii_domain);

} // namespace scamscope
