#include "scamscope/domcluster.hpp"

#include "scamscope/errors.hpp"
#include "scamscope/union_find.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>

namespace scamscope {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

// 16-byte form: IPv4 mapped into the low 4 bytes
bool parse_ip(const std::string& text, std::array<uint8_t, 16>& out, int& total_bits) {
    out.fill(0);
    if (text.find(':') != std::string::npos) {
        // minimal IPv6: full or '::' compressed groups of hex
        std::vector<uint16_t> head, tail;
        bool in_tail = false;
        size_t i = 0;
        const std::string& s = text;
        if (s.rfind("::", 0) == 0) {
            in_tail = true;
            i = 2;
        }
        std::string group;
        auto flush = [&]() {
            if (group.empty()) return false;
            if (group.size() > 4) return false;
            uint16_t v = 0;
            for (char c : group) {
                if (!std::isxdigit(static_cast<unsigned char>(c))) return false;
                v = static_cast<uint16_t>(v * 16 + (std::isdigit(static_cast<unsigned char>(c))
                                                        ? c - '0'
                                                        : std::tolower(c) - 'a' + 10));
            }
            (in_tail ? tail : head).push_back(v);
            group.clear();
            return true;
        };
        for (; i < s.size(); ++i) {
            if (s[i] == ':') {
                if (i + 1 < s.size() && s[i + 1] == ':') {
                    if (in_tail) return false; // second '::'
                    if (!group.empty() && !flush()) return false;
                    in_tail = true;
                    ++i;
                } else {
                    if (!flush()) return false;
                }
            } else {
                group += s[i];
            }
        }
        if (!group.empty() && !flush()) return false;
        size_t n = head.size() + tail.size();
        if (n > 8 || (!in_tail && n != 8)) return false;
        std::vector<uint16_t> groups(8, 0);
        for (size_t k = 0; k < head.size(); ++k) groups[k] = head[k];
        for (size_t k = 0; k < tail.size(); ++k) groups[8 - tail.size() + k] = tail[k];
        for (int k = 0; k < 8; ++k) {
            out[k * 2] = static_cast<uint8_t>(groups[k] >> 8);
            out[k * 2 + 1] = static_cast<uint8_t>(groups[k] & 0xFF);
        }
        total_bits = 128;
        return true;
    }
    // IPv4 dotted quad
    std::istringstream in(text);
    std::string part;
    int idx = 0;
    while (std::getline(in, part, '.')) {
        if (idx >= 4 || part.empty() || part.size() > 3) return false;
        int v = 0;
        for (char c : part) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
            v = v * 10 + (c - '0');
        }
        if (v > 255) return false;
        out[12 + idx] = static_cast<uint8_t>(v);
        ++idx;
    }
    if (idx != 4) return false;
    total_bits = 32;
    return true;
}

} // namespace

bool ip_in_cidr(const std::string& ip, const std::string& cidr_or_ip) {
    std::string base = cidr_or_ip;
    int prefix = -1;
    size_t slash = cidr_or_ip.find('/');
    if (slash != std::string::npos) {
        base = cidr_or_ip.substr(0, slash);
        try {
            prefix = std::stoi(cidr_or_ip.substr(slash + 1));
        } catch (const std::exception&) {
            return false;
        }
    }
    std::array<uint8_t, 16> a{}, b{};
    int abits = 0, bbits = 0;
    if (!parse_ip(ip, a, abits) || !parse_ip(base, b, bbits)) return false;
    if (abits != bbits) return false;
    if (prefix < 0) prefix = bbits;
    if (prefix > bbits) return false;
    int skip = 16 - bbits / 8; // compare only the address family's bytes
    int full = prefix / 8, rem = prefix % 8;
    for (int i = 0; i < full; ++i)
        if (a[skip + i] != b[skip + i]) return false;
    if (rem > 0) {
        uint8_t mask = static_cast<uint8_t>(0xFF << (8 - rem));
        if ((a[skip + full] & mask) != (b[skip + full] & mask)) return false;
    }
    return true;
}

bool registrant_valid(const std::string& registrant,
                      const std::vector<std::string>& masked_markers) {
    std::string t = trim(registrant);
    if (t.empty()) return false;
    std::string lower = lowercase(t);
    for (const std::string& marker : masked_markers)
        if (!marker.empty() && lower.find(lowercase(marker)) != std::string::npos) return false;
    return true;
}

Category dominant_category(const std::vector<Category>& member_categories) {
    static const std::vector<Category> kSeverity = {
        Category::c4_trading_scam, Category::c3_phishing,     Category::c5_referral_fraud,
        Category::c6_adult_gambling, Category::c2_parked,     Category::c1_registered,
        Category::unclassified,    Category::c0_false_positive,
    };
    std::map<Category, size_t> counts;
    for (Category c : member_categories) ++counts[c];
    size_t best = 0;
    for (const auto& [c, n] : counts) best = std::max(best, n);
    for (Category c : kSeverity)
        if (counts.count(c) && counts[c] == best) return c;
    return Category::unclassified;
}

DomainClusters cluster_domains(const std::vector<DomainRecord>& records, const Denylists& deny,
                               const ClusterOptions& opts) {
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < records.size(); ++i) {
        auto [it, inserted] = index.emplace(records[i].domain, i);
        if (!inserted) throw InputError("duplicate domain record: " + records[i].domain);
    }

    auto ip_denied = [&](const std::string& ip) {
        return std::any_of(deny.parking_ips.begin(), deny.parking_ips.end(),
                           [&](const std::string& entry) { return ip_in_cidr(ip, entry); });
    };

    // effective evidence per record
    std::vector<std::set<std::string>> ips(records.size());
    std::vector<std::optional<std::string>> registrants(records.size());
    for (size_t i = 0; i < records.size(); ++i) {
        for (const std::string& ip : records[i].ip_history)
            if (!ip_denied(ip)) ips[i].insert(ip);
        if (records[i].registrant &&
            registrant_valid(*records[i].registrant, deny.masked_registrant_markers))
            registrants[i] = trim(*records[i].registrant);
    }

    if (opts.auto_deny_common_ips) {
        std::map<std::string, size_t> ip_counts;
        for (const auto& s : ips)
            for (const std::string& ip : s) ++ip_counts[ip];
        for (auto& s : ips) {
            for (auto it = s.begin(); it != s.end();)
                it = ip_counts[*it] > opts.auto_deny_threshold ? s.erase(it) : std::next(it);
        }
    }

    UnionFind uf(records.size());
    auto link_by = [&](auto get_items) {
        std::map<std::string, size_t> first_holder;
        for (size_t i = 0; i < records.size(); ++i)
            for (const std::string& item : get_items(i)) {
                auto [it, inserted] = first_holder.emplace(item, i);
                if (!inserted) uf.unite(it->second, i);
            }
    };
    link_by([&](size_t i) { return ips[i]; });                                     // phase 1
    link_by([&](size_t i) {                                                        // phase 2
        return registrants[i] ? std::set<std::string>{*registrants[i]} : std::set<std::string>{};
    });
    link_by([&](size_t i) { return records[i].addresses; });                       // phase 3

    std::map<size_t, std::vector<size_t>> components;
    for (size_t i = 0; i < records.size(); ++i) components[uf.find(i)].push_back(i);

    DomainClusters out;
    for (const auto& [root, member_idx] : components) {
        if (member_idx.size() < 2) {
            out.isolated.push_back(records[member_idx[0]].domain);
            continue;
        }
        Family f;
        std::vector<Category> cats;
        std::map<std::string, size_t> ip_count, reg_count, addr_count;
        for (size_t i : member_idx) {
            f.members.push_back(records[i].domain);
            cats.push_back(records[i].category);
            if (records[i].target_exchange) f.target_exchanges.insert(*records[i].target_exchange);
            for (const std::string& ip : ips[i]) ++ip_count[ip];
            if (registrants[i]) ++reg_count[*registrants[i]];
            for (const std::string& a : records[i].addresses) {
                ++addr_count[a];
                f.member_addresses.insert(a);
            }
        }
        std::sort(f.members.begin(), f.members.end());
        f.id = f.members.front();
        for (const auto& [ip, n] : ip_count)
            if (n >= 2) f.shared_ips.insert(ip);
        for (const auto& [r, n] : reg_count)
            if (n >= 2) f.shared_registrants.insert(r);
        for (const auto& [a, n] : addr_count)
            if (n >= 2) f.shared_addresses.insert(a);
        f.dominant_category = dominant_category(cats);
        out.families.push_back(std::move(f));
    }

    std::sort(out.families.begin(), out.families.end(), [](const Family& a, const Family& b) {
        if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
        return a.id < b.id;
    });
    std::sort(out.isolated.begin(), out.isolated.end());
    return out;
}

FamilyReportRow family_report(const Family& f) {
    if (f.members.size() < 2)
        throw std::logic_error("family must have at least two members: " + f.id);
    FamilyReportRow row;
    row.family = f.id;
    row.num_urls = f.members.size();
    row.num_exchanges = f.target_exchanges.size();
    row.target_exchanges = f.target_exchanges;
    row.category = f.dominant_category;
    row.shared_ips = f.shared_ips;
    row.shared_registrants = f.shared_registrants;
    row.shared_addresses = f.shared_addresses;
    return row;
}

} // namespace scamscope
