#pragma once

#include "scamscope/appcluster.hpp"
#include "scamscope/domcluster.hpp"
#include "scamscope/flowgraph.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace scamscope {

// The assembled analysis output: category distribution, per-exchange
// counts, top-flagged tables, family tables, money-flow tables and the
// creation-time histogram.
struct Report {
    std::map<std::string, std::string> config_echo;

    std::map<std::string, size_t> category_distribution; // tag -> count

    struct ExchangeCount {
        std::string exchange;
        size_t mal_urls = 0;
        size_t fake_apps = 0;
        bool operator==(const ExchangeCount&) const = default;
    };
    std::vector<ExchangeCount> per_exchange;

    struct FlaggedDomain {
        std::string domain;
        std::string exchange;
        int engines = 0;
        std::string category;
        bool operator==(const FlaggedDomain&) const = default;
    };
    std::vector<FlaggedDomain> top_flagged_domains;

    struct FlaggedApp {
        std::string app_name;
        std::string exchange;
        std::string sha256;
        int engines = 0;
        bool operator==(const FlaggedApp&) const = default;
    };
    std::vector<FlaggedApp> top_flagged_apps;

    std::vector<FamilyReportRow> domain_families;

    struct AppFamilyRow {
        std::string id; // smallest member sha256
        size_t size = 0;
        std::vector<std::string> shared_certs;
        bool similarity_core = false;
        bool operator==(const AppFamilyRow&) const = default;
    };
    std::vector<AppFamilyRow> app_families;

    struct ProfitableAddress {
        std::string address;
        std::string chain;
        std::vector<std::string> domains;
        size_t tx_count = 0;
        std::string native_total; // decimal string
        std::string usd;          // decimal string, 2 digits
        bool operator==(const ProfitableAddress&) const = default;
    };
    std::vector<ProfitableAddress> top_addresses;

    struct ProfitableFamily {
        std::string family;
        size_t num_domains = 0;
        size_t num_addresses = 0;
        size_t tx_count = 0;
        std::map<std::string, std::string> native; // chain tag -> decimal string
        std::string usd;
        bool operator==(const ProfitableFamily&) const = default;
    };
    std::vector<ProfitableFamily> top_families;

    struct SharedTransfer {
        std::string address;
        std::vector<std::string> scam_senders;
        size_t tx_count = 0;
        std::string usd;
        bool fully_drained = false;
        bool operator==(const SharedTransfer&) const = default;
    };
    std::vector<SharedTransfer> shared_transfers;

    std::map<std::string, size_t> role_counts; // role tag -> count
    std::vector<std::string> silent_scam;

    std::map<std::string, size_t> creation_histogram; // year -> count

    std::map<std::string, size_t> totals;
    std::string total_received_usd;

    // emitted only when a trading-volume file is supplied
    struct VolumeRow {
        std::string exchange;
        std::string volume;
        size_t mal_urls = 0;
        bool operator==(const VolumeRow&) const = default;
    };
    std::vector<VolumeRow> volume_vs_scams;
};

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string report_to_text(const Report& r);

enum class ReportFormat { json, text };
std::string emit_report(const Report& r, ReportFormat format);

bool operator==(const Report& a, const Report& b);

} // namespace scamscope
