#pragma once

#include "scamscope/labeler.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace scamscope {

struct DomainRecord {
    std::string domain;
    Category category = Category::unclassified;
    std::set<std::string> ip_history; // passive DNS
    std::optional<std::string> registrant;
    std::set<std::string> addresses; // validated chain addresses only
    std::optional<std::string> target_exchange;
    std::optional<std::string> whois_created;
};

struct Denylists {
    std::vector<std::string> parking_ips; // exact IPs or CIDR ranges
    std::vector<std::string> masked_registrant_markers; // e.g. "GDPR Masked"
};

struct ClusterOptions {
    // Stand-in for the manual pruning of hosting IPs with uncommon cluster
    // sizes: drop IPs shared by more than this many domains.
    bool auto_deny_common_ips = false;
    size_t auto_deny_threshold = 50;
};

struct Family {
    std::string id;                   // lexicographically smallest member
    std::vector<std::string> members; // sorted, size >= 2
    std::set<std::string> shared_ips;
    std::set<std::string> shared_registrants;
    std::set<std::string> shared_addresses;
    std::set<std::string> member_addresses; // union over members, for money flow
    Category dominant_category = Category::unclassified;
    std::set<std::string> target_exchanges;
};

struct DomainClusters {
    std::vector<Family> families;      // size desc, then id
    std::vector<std::string> isolated; // sorted
};

// Connected components over the evidence graph: shared non-parking IP,
// shared valid registrant, shared blockchain address. Components of size
// >= 2 become families. Throws InputError on duplicate domains.
DomainClusters cluster_domains(const std::vector<DomainRecord>& records, const Denylists& deny,
                               const ClusterOptions& options = {});

struct FamilyReportRow {
    std::string family;
    size_t num_urls = 0;
    size_t num_exchanges = 0;
    std::set<std::string> target_exchanges;
    Category category = Category::unclassified;
    std::set<std::string> shared_ips;
    std::set<std::string> shared_registrants;
    std::set<std::string> shared_addresses;

    bool operator==(const FamilyReportRow&) const = default;
};

// Throws std::logic_error when the family has fewer than two members.
FamilyReportRow family_report(const Family& f);

// Modal category over members; ties break by severity C4 > C3 > C5 > C6 >
// C2 > C1.
Category dominant_category(const std::vector<Category>& member_categories);

bool ip_in_cidr(const std::string& ip, const std::string& cidr_or_ip);
bool registrant_valid(const std::string& registrant,
                      const std::vector<std::string>& masked_markers);

} // namespace scamscope
