#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace scamscope {

struct Url {
    std::string scheme; // lowercased, may be empty for scheme-less input
    std::string host;   // lowercased
    std::string path;
    std::string query;  // without the '?'
};

// Minimal parser for http(s)-style URLs as found in redirect chains and
// app-embedded strings. Returns nullopt when no plausible host exists.
std::optional<Url> parse_url(const std::string& s);

// key=value pairs in order; keys without '=' get an empty value.
std::vector<std::pair<std::string, std::string>> query_params(const std::string& query);

// host == domain, or host is a subdomain of it ("www.binance.com" matches
// "binance.com"). Case-insensitive, trailing dots ignored.
bool host_matches_domain(const std::string& host, const std::string& domain);

} // namespace scamscope
