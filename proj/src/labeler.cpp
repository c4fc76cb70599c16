#include "scamscope/labeler.hpp"

#include "scamscope/addrex.hpp"
#include "scamscope/url.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace scamscope {

namespace {

constexpr std::array<std::tuple<Category, std::string_view, std::string_view>, 8> kCategories = {{
    {Category::c0_false_positive, "C0", "FalsePositive"},
    {Category::c1_registered, "C1", "Registered"},
    {Category::c2_parked, "C2", "Parked"},
    {Category::c3_phishing, "C3", "Phishing"},
    {Category::c4_trading_scam, "C4", "TradingScam"},
    {Category::c5_referral_fraud, "C5", "ReferralFraud"},
    {Category::c6_adult_gambling, "C6", "AdultGambling"},
    {Category::unclassified, "Unclassified", "Unclassified"},
}};

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

} // namespace

std::string_view category_tag(Category c) {
    for (const auto& [cat, tag, name] : kCategories)
        if (cat == c) return tag;
    throw std::invalid_argument("unknown category value");
}

std::string_view category_name(Category c) {
    for (const auto& [cat, tag, name] : kCategories)
        if (cat == c) return name;
    throw std::invalid_argument("unknown category value");
}

Category category_from_tag(std::string_view tag) {
    for (const auto& [cat, t, name] : kCategories)
        if (t == tag || name == tag) return cat;
    throw std::invalid_argument("unknown category tag: " + std::string(tag));
}

std::optional<Referral> detect_referral(const std::vector<std::string>& chain,
                                        const std::vector<OfficialProfile>& profiles) {
    for (const std::string& link : chain) {
        std::optional<Url> url = parse_url(link);
        if (!url || url->query.empty()) continue;
        for (const OfficialProfile& profile : profiles) {
            bool official = std::any_of(
                profile.domains.begin(), profile.domains.end(),
                [&](const std::string& d) { return host_matches_domain(url->host, d); });
            if (!official) continue;
            for (const auto& [key, value] : query_params(url->query)) {
                bool referral_key =
                    std::find(profile.referral_params.begin(), profile.referral_params.end(),
                              key) != profile.referral_params.end();
                if (referral_key && !value.empty())
                    return Referral{profile.exchange, key, value, link};
            }
        }
    }
    return std::nullopt;
}

LabelDecision classify_domain(const DomainEvidence& e,
                              const std::vector<OfficialProfile>& profiles,
                              const LabelerConfig& cfg) {
    if (e.manual_label)
        return {*e.manual_label, "manual-override"};

    if (!e.reachable) return {Category::c1_registered, "unreachable"};
    if (e.blank_page) return {Category::c1_registered, "blank-page"};

    if (e.parking_fingerprint)
        return {Category::c2_parked, "parking-fingerprint:" + *e.parking_fingerprint};

    std::vector<std::string> chain = e.redirect_chain;
    if (e.landing_url && (chain.empty() || chain.back() != *e.landing_url))
        chain.push_back(*e.landing_url);
    if (auto referral = detect_referral(chain, profiles))
        return {Category::c5_referral_fraud,
                "referral:" + referral->exchange + "?" + referral->param + "=" + referral->code};

    for (const std::string tag : {"adult", "gambling"})
        if (e.content_tags.count(tag))
            return {Category::c6_adult_gambling, "content-tag:" + tag};

    if (e.visual_similarity && *e.visual_similarity >= cfg.phishing_similarity_threshold)
        return {Category::c3_phishing, "visual-similarity"};

    if (e.av_flag_count >= cfg.scam_flag_threshold) {
        for (const AddressObservation& obs : scan_text(e.page_text, e.domain))
            if (obs.address.validity != Validity::invalid)
                return {Category::c4_trading_scam,
                        "av-flagged+scam-address:" + obs.address.raw};
        std::string text = lowercase(e.page_text);
        for (const std::string& marker : cfg.trust_trading_markers)
            if (text.find(lowercase(marker)) != std::string::npos)
                return {Category::c4_trading_scam, "av-flagged+trust-marker:" + marker};
        return {Category::c3_phishing, "av-flagged"};
    }

    return {Category::unclassified, "no-rule"};
}

} // namespace scamscope
