#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace scamscope {

enum class Category {
    c0_false_positive,
    c1_registered,
    c2_parked,
    c3_phishing,
    c4_trading_scam,
    c5_referral_fraud,
    c6_adult_gambling,
    unclassified,
};

std::string_view category_tag(Category c);           // "C0".."C6", "Unclassified"
std::string_view category_name(Category c);          // "FalsePositive", ...
Category category_from_tag(std::string_view tag);    // throws std::invalid_argument

struct DomainEvidence {
    std::string domain;
    bool reachable = false;
    bool blank_page = false;
    std::optional<std::string> landing_url; // final redirect target
    std::vector<std::string> redirect_chain;
    std::string page_text;
    std::string page_hash;
    std::optional<std::string> parking_fingerprint;
    int av_flag_count = 0;
    std::set<std::string> content_tags;
    std::optional<double> visual_similarity; // against the official site, [0,1]
    std::optional<Category> manual_label;
    std::optional<std::string> target_exchange; // pipeline metadata
    std::optional<std::string> whois_created;   // ISO date, report histogram
};

struct OfficialProfile {
    std::string exchange;
    std::vector<std::string> domains; // at least one
    std::vector<std::string> page_hashes;
    std::vector<std::string> referral_params = {"ref"};
};

struct LabelerConfig {
    double phishing_similarity_threshold = 0.8;
    int scam_flag_threshold = 1; // flagged by at least this many engines
    std::set<std::string> trust_trading_markers = {"giveaway", "airdrop", "send", "bonus",
                                                   "double"};
};

struct Referral {
    std::string exchange;
    std::string param;
    std::string code;
    std::string url;
};

// First URL in the chain that lands on an official domain with one of that
// profile's referral parameters in its query string.
std::optional<Referral> detect_referral(const std::vector<std::string>& chain,
                                        const std::vector<OfficialProfile>& profiles);

struct LabelDecision {
    Category category = Category::unclassified;
    std::string reason; // the triggering rule
};

// Deterministic rule cascade: manual override, C1 unreachable/blank,
// C2 parked, C5 referral, C6 adult/gambling, C3 visual similarity,
// C3/C4 AV-flagged, otherwise Unclassified.
LabelDecision classify_domain(const DomainEvidence& evidence,
                              const std::vector<OfficialProfile>& profiles,
                              const LabelerConfig& config = {});

} // namespace scamscope
