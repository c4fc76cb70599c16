#pragma once

#include "scamscope/io.hpp"
#include "scamscope/report.hpp"

#include <memory>
#include <optional>
#include <string>

namespace scamscope {

struct PipelineConfig {
    // stage toggles
    bool run_generate = false;
    bool run_extract = false;
    bool run_label = false;
    bool run_cluster_domains = false;
    bool run_cluster_apps = false;
    bool run_link = false;
    bool run_flow = false;

    // inputs
    std::string targets_file;      // domains to generate candidates for
    std::string dictionary_file;   // optional wordlist override
    std::string pages_file;
    std::string evidence_file;
    std::string profiles_file;
    std::string records_file;
    std::string apps_file;
    std::string official_apps_file;
    std::string common_certs_file;
    std::string parking_file;
    std::string masked_file;
    std::string scam_addresses_file; // extra scam addresses for the flow stage
    std::string scam_domains_file;   // extra scam domains for the link stage
    std::string ledger_file;
    std::string prices_file;
    std::string volume_file;         // optional, enables the volume section

    // outputs are written under this directory
    std::string out_dir = ".";

    // thresholds
    double phishing_threshold = 0.8;
    int scam_flag_threshold = 1;
    double app_similarity_threshold = 0.8;
    int flow_max_hops = 3;
    bool extended_chains = false;
    bool auto_deny_common_ips = false; // drop IPs shared by > auto_deny_threshold domains
    size_t auto_deny_threshold = 50;
    size_t top_n = 5;
};

// Seam for evidence acquisition. The shipped implementation reads fixture
// files; a live collector (resolver, page fetcher, whois client, ledger
// client) would implement the same interface.
class EvidenceSource {
public:
    virtual ~EvidenceSource() = default;
    virtual std::vector<PageText> pages() = 0;
    virtual std::vector<DomainEvidence> evidence() = 0;
    virtual std::vector<DomainRecord> records() = 0;
    virtual std::vector<AppRecord> apps() = 0;
    virtual std::vector<TransferRecord> ledger() = 0;
};

class FileEvidenceSource : public EvidenceSource {
public:
    explicit FileEvidenceSource(const PipelineConfig& cfg) : cfg_(cfg) {}
    std::vector<PageText> pages() override { return load_pages(cfg_.pages_file); }
    std::vector<DomainEvidence> evidence() override { return load_evidence(cfg_.evidence_file); }
    std::vector<DomainRecord> records() override { return load_domain_records(cfg_.records_file); }
    std::vector<AppRecord> apps() override { return load_apps(cfg_.apps_file); }
    std::vector<TransferRecord> ledger() override { return load_ledger(cfg_.ledger_file); }

private:
    PipelineConfig cfg_;
};

// Runs the enabled stages in order (generate, extract, label,
// cluster-domains, cluster-apps, link, flow), writes each stage's output
// file under out_dir, and assembles the report. Stage errors abort with
// the stage name in the message. Deterministic for fixed inputs.
Report run_pipeline(const PipelineConfig& cfg);
Report run_pipeline(const PipelineConfig& cfg, EvidenceSource& source);

} // namespace scamscope
