#include "scamscope/url.hpp"

#include <algorithm>
#include <cctype>

namespace scamscope {

namespace {

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

bool plausible_host(const std::string& host) {
    if (host.empty() || host.front() == '.' || host.back() == '.') return false;
    bool dot = false;
    for (unsigned char c : host) {
        if (c == '.') dot = true;
        else if (!std::isalnum(c) && c != '-') return false;
    }
    return dot || host == "localhost";
}

} // namespace

std::optional<Url> parse_url(const std::string& s) {
    if (s.empty()) return std::nullopt;
    Url url;
    std::string rest = s;
    size_t scheme_end = rest.find("://");
    if (scheme_end != std::string::npos) {
        url.scheme = lowercase(rest.substr(0, scheme_end));
        rest = rest.substr(scheme_end + 3);
    }
    size_t host_end = rest.find_first_of("/?#");
    std::string authority = rest.substr(0, host_end);
    // strip userinfo and port
    size_t at = authority.rfind('@');
    if (at != std::string::npos) authority = authority.substr(at + 1);
    size_t colon = authority.find(':');
    if (colon != std::string::npos) authority = authority.substr(0, colon);
    url.host = lowercase(authority);
    if (!plausible_host(url.host)) return std::nullopt;

    if (host_end != std::string::npos && rest[host_end] != '#') {
        std::string tail = rest.substr(host_end);
        size_t frag = tail.find('#');
        if (frag != std::string::npos) tail = tail.substr(0, frag);
        size_t q = tail.find('?');
        if (q == std::string::npos) {
            url.path = tail;
        } else {
            url.path = tail.substr(0, q);
            url.query = tail.substr(q + 1);
        }
    }
    return url;
}

std::vector<std::pair<std::string, std::string>> query_params(const std::string& query) {
    std::vector<std::pair<std::string, std::string>> out;
    size_t start = 0;
    while (start <= query.size() && !query.empty()) {
        size_t amp = query.find('&', start);
        std::string part = query.substr(start, amp == std::string::npos ? std::string::npos
                                                                        : amp - start);
        if (!part.empty()) {
            size_t eq = part.find('=');
            if (eq == std::string::npos)
                out.emplace_back(part, "");
            else
                out.emplace_back(part.substr(0, eq), part.substr(eq + 1));
        }
        if (amp == std::string::npos) break;
        start = amp + 1;
    }
    return out;
}

bool host_matches_domain(const std::string& host, const std::string& domain) {
    std::string h = lowercase(host);
    std::string d = lowercase(domain);
    while (!h.empty() && h.back() == '.') h.pop_back();
    while (!d.empty() && d.back() == '.') d.pop_back();
    if (h.empty() || d.empty()) return false;
    if (h == d) return true;
    return h.size() > d.size() && h.compare(h.size() - d.size() - 1, d.size() + 1, "." + d) == 0;
}

} // namespace scamscope
