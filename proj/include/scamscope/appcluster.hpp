#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace scamscope {

struct AppRecord {
    std::string sha256;       // 64 hex
    std::string app_name;
    std::string package_name;
    std::string cert_sha1;    // 40 hex, signing certificate digest
    std::set<std::string> method_set;
    std::set<std::string> embedded_urls;
    std::set<std::string> av_tags;
    int av_flag_count = 0;    // engines flagging, for report ranking
    std::optional<std::string> target_exchange;
};

struct OfficialAppEntry {
    std::string exchange;
    std::string package_name;
    std::string app_name;
    std::set<std::string> certs; // lowercase hex, at least one
};

struct OfficialAppIndex {
    std::vector<OfficialAppEntry> entries;

    // entry whose package name or app name collides with the record
    const OfficialAppEntry* match(const AppRecord& a) const;
};

// True when the app collides with an official package/app name but is
// signed by a certificate outside the official set.
bool detect_fake(const AppRecord& a, const OfficialAppIndex& index);

// |a n b| / max(|a|, |b|); throws std::invalid_argument on an empty set.
double method_similarity(const std::set<std::string>& a, const std::set<std::string>& b);

struct AppFamily {
    std::vector<std::string> members; // sha256, sorted, size >= 2
    std::set<std::string> shared_certs;
    bool similarity_core = false; // formed (at least partly) via code similarity
};

struct AppClusters {
    std::vector<AppFamily> families;   // size desc, then smallest member
    std::vector<std::string> isolated; // sha256, sorted
};

// Connected components over the union of similarity edges (method
// similarity strictly above threshold) and shared-certificate edges
// (certificates in common_certs excluded). Apps with empty method sets
// participate in signature clustering only.
AppClusters cluster_apps(const std::vector<AppRecord>& apps,
                         const std::set<std::string>& common_certs, double threshold = 0.8);

struct AppDomainLink {
    std::string sha256;
    std::string url;
    std::string domain; // the matched scam domain
};

struct LinkResult {
    std::vector<AppDomainLink> links;
    std::vector<std::string> warnings; // unparseable URLs, skipped
};

LinkResult link_apps_to_domains(const std::vector<AppRecord>& apps,
                                const std::set<std::string>& scam_domains);

} // namespace scamscope
