// scamscope CLI: typosquatting generation, address extraction, domain
// labeling, domain/app clustering, app-domain linking, money-flow analysis
// and report emission, each runnable standalone or as the full pipeline.

#include "scamscope/pipeline.hpp"

#include <CLI11.hpp>

#include <unistd.h>

#include <iostream>

namespace {

using namespace scamscope;
using nlohmann::json;

int cmd_generate(const std::string& domain, const std::string& models,
                 const std::string& dict_file, const std::string& out) {
    GeneratorConfig cfg = GeneratorConfig::defaults();
    if (!models.empty()) {
        cfg.enabled_models.clear();
        std::istringstream in(models);
        std::string tag;
        while (std::getline(in, tag, ','))
            if (!tag.empty()) cfg.enabled_models.insert(model_from_tag(tag));
    }
    if (!dict_file.empty()) cfg.dictionary = load_lines(dict_file);
    TargetDomain target = TargetDomain::parse(domain);
    std::vector<Candidate> candidates = generate_candidates(target, cfg);
    save_candidates(out, candidates);
    std::cerr << "generated " << candidates.size() << " candidates for " << domain << "\n";
    return 0;
}

int cmd_extract(const std::string& pages, bool extended, const std::string& out) {
    ScanOptions opts;
    opts.extended_chains = extended;
    std::vector<AddressObservation> all;
    for (const PageText& page : load_pages(pages)) {
        auto found = scan_text(page.text, page.domain, opts);
        all.insert(all.end(), found.begin(), found.end());
    }
    std::sort(all.begin(), all.end(), [](const AddressObservation& a, const AddressObservation& b) {
        return std::tie(a.source_domain, a.byte_offset) < std::tie(b.source_domain, b.byte_offset);
    });
    save_observations(out, all);
    std::cerr << "extracted " << all.size() << " observations\n";
    return 0;
}

int cmd_label(const std::string& evidence_file, const std::string& profiles_file,
              double phishing_threshold, int scam_flags, const std::string& out) {
    std::vector<DomainEvidence> evidence = load_evidence(evidence_file);
    std::vector<OfficialProfile> profiles = load_profiles(profiles_file);
    LabelerConfig cfg;
    cfg.phishing_similarity_threshold = phishing_threshold;
    cfg.scam_flag_threshold = scam_flags;
    std::sort(evidence.begin(), evidence.end(),
              [](const DomainEvidence& a, const DomainEvidence& b) { return a.domain < b.domain; });
    std::ofstream file(out, std::ios::binary);
    if (!file) throw InputError("cannot write " + out);
    for (const DomainEvidence& e : evidence) {
        LabelDecision d = classify_domain(e, profiles, cfg);
        file << json{{"domain", e.domain},
                     {"category", std::string(category_tag(d.category))},
                     {"reason", d.reason}}
                    .dump()
             << '\n';
    }
    return 0;
}

int cmd_cluster_domains(const std::string& records_file, const std::string& parking_file,
                        const std::string& masked_file, const ClusterOptions& opts,
                        const std::string& out) {
    std::vector<DomainRecord> records = load_domain_records(records_file);
    Denylists deny;
    if (!parking_file.empty()) deny.parking_ips = load_lines(parking_file);
    if (!masked_file.empty()) deny.masked_registrant_markers = load_lines(masked_file);
    DomainClusters clusters = cluster_domains(records, deny, opts);
    json doc;
    doc["families"] = json::array();
    for (const Family& f : clusters.families) {
        FamilyReportRow row = family_report(f);
        doc["families"].push_back(json{{"family", row.family},
                                       {"urls", row.num_urls},
                                       {"exchanges", row.num_exchanges},
                                       {"targets", row.target_exchanges},
                                       {"category", std::string(category_tag(row.category))},
                                       {"shared_ips", row.shared_ips},
                                       {"shared_whois", row.shared_registrants},
                                       {"shared_addresses", row.shared_addresses},
                                       {"members", f.members},
                                       {"addresses", f.member_addresses}});
    }
    doc["isolated"] = clusters.isolated;
    write_file(out, doc.dump(2) + "\n");
    std::cerr << clusters.families.size() << " families, " << clusters.isolated.size()
              << " isolated\n";
    return 0;
}

int cmd_cluster_apps(const std::string& apps_file, const std::string& official_file,
                     const std::string& certs_file, double threshold, const std::string& out) {
    std::vector<AppRecord> apps = load_apps(apps_file);
    OfficialAppIndex official = load_official_apps(official_file);
    std::vector<AppRecord> fakes;
    for (const AppRecord& a : apps)
        if (detect_fake(a, official)) fakes.push_back(a);
    std::set<std::string> common_certs;
    if (!certs_file.empty())
        for (const std::string& c : load_lines(certs_file)) common_certs.insert(c);
    AppClusters clusters = cluster_apps(fakes, common_certs, threshold);
    json doc;
    doc["fake_apps"] = json::array();
    for (const AppRecord& a : fakes) doc["fake_apps"].push_back(a.sha256);
    doc["families"] = json::array();
    for (const AppFamily& f : clusters.families)
        doc["families"].push_back(json{{"members", f.members},
                                       {"shared_certs", f.shared_certs},
                                       {"similarity_core", f.similarity_core}});
    doc["isolated"] = clusters.isolated;
    write_file(out, doc.dump(2) + "\n");
    std::cerr << fakes.size() << " fake apps, " << clusters.families.size() << " families\n";
    return 0;
}

int cmd_link(const std::string& apps_file, const std::string& domains_file,
             const std::string& out) {
    std::vector<AppRecord> apps = load_apps(apps_file);
    std::set<std::string> scam_domains;
    for (const std::string& d : load_lines(domains_file)) scam_domains.insert(d);
    LinkResult result = link_apps_to_domains(apps, scam_domains);
    std::ofstream file(out, std::ios::binary);
    if (!file) throw InputError("cannot write " + out);
    for (const AppDomainLink& link : result.links)
        file << json{{"sha256", link.sha256}, {"url", link.url}, {"domain", link.domain}}.dump()
             << '\n';
    for (const std::string& warning : result.warnings) std::cerr << "warning: " << warning << "\n";
    return 0;
}

// flat key=value config for `run`/`report`; command-line flags win
void apply_config_file(const std::string& path, CLI::App* cmd, PipelineConfig& cfg) {
    auto trim = [](std::string s) {
        size_t b = s.find_first_not_of(" \t");
        if (b == std::string::npos) return std::string();
        size_t e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
    };
    for (const std::string& line : load_lines(path)) {
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw InputError(path + ": expected key=value, got: " + line);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (cmd->count("--" + key) > 0) continue;
        if (key == "targets") cfg.targets_file = value;
        else if (key == "dict") cfg.dictionary_file = value;
        else if (key == "pages") cfg.pages_file = value;
        else if (key == "evidence") cfg.evidence_file = value;
        else if (key == "profiles") cfg.profiles_file = value;
        else if (key == "records") cfg.records_file = value;
        else if (key == "apps") cfg.apps_file = value;
        else if (key == "official") cfg.official_apps_file = value;
        else if (key == "common-certs") cfg.common_certs_file = value;
        else if (key == "parking") cfg.parking_file = value;
        else if (key == "masked") cfg.masked_file = value;
        else if (key == "scam-addresses") cfg.scam_addresses_file = value;
        else if (key == "scam-domains") cfg.scam_domains_file = value;
        else if (key == "ledger") cfg.ledger_file = value;
        else if (key == "prices") cfg.prices_file = value;
        else if (key == "volume") cfg.volume_file = value;
        else if (key == "out-dir") cfg.out_dir = value;
        else if (key == "phishing-threshold") cfg.phishing_threshold = std::stod(value);
        else if (key == "scam-flags") cfg.scam_flag_threshold = std::stoi(value);
        else if (key == "app-threshold") cfg.app_similarity_threshold = std::stod(value);
        else if (key == "max-hops") cfg.flow_max_hops = std::stoi(value);
        else if (key == "top") cfg.top_n = static_cast<size_t>(std::stoul(value));
        else if (key == "extended-chains") cfg.extended_chains = value == "true" || value == "1";
        else if (key == "auto-deny-ips") cfg.auto_deny_common_ips = value == "true" || value == "1";
        else if (key == "auto-deny-threshold")
            cfg.auto_deny_threshold = static_cast<size_t>(std::stoul(value));
        else throw InputError(path + ": unknown config key: " + key);
    }
}

int cmd_flow(const std::string& ledger_file, const std::string& addrs_file,
             const std::string& prices_file, int max_hops, const std::string& out) {
    namespace fs = std::filesystem;
    PipelineConfig cfg;
    cfg.run_flow = true;
    cfg.ledger_file = ledger_file;
    cfg.scam_addresses_file = addrs_file;
    cfg.prices_file = prices_file;
    cfg.flow_max_hops = max_hops;
    fs::path scratch = fs::temp_directory_path() / ("scamscope_flow_" + std::to_string(getpid()));
    cfg.out_dir = scratch.string();
    run_pipeline(cfg);
    fs::copy_file(scratch / "flow.json", out, fs::copy_options::overwrite_existing);
    fs::remove_all(scratch);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cryptocurrency exchange scam analysis pipeline"};
    app.require_subcommand(1);

    // generate
    std::string domain, models, dict_file, out;
    auto* generate = app.add_subcommand("generate", "generate typosquatting candidates");
    generate->add_option("--domain", domain, "target domain, e.g. binance.com")->required();
    generate->add_option("--models", models, "comma-separated model tags (default: all 13)");
    generate->add_option("--dict", dict_file, "dictionary wordlist file");
    generate->add_option("--out", out, "output JSONL path")->required();

    // extract
    std::string pages;
    bool extended = false;
    auto* extract = app.add_subcommand("extract", "extract blockchain addresses from page text");
    extract->add_option("--pages", pages, "pages JSONL: {\"domain\",\"text\"}")->required();
    extract->add_flag("--extended-chains", extended, "also detect xrp/tron/neo/binance-coin");
    extract->add_option("--out", out, "output JSONL path")->required();

    // label
    std::string evidence_file, profiles_file;
    double phishing_threshold = 0.8;
    int scam_flags = 1;
    auto* label = app.add_subcommand("label", "classify domains into C0..C6");
    label->add_option("--evidence", evidence_file, "evidence JSONL")->required();
    label->add_option("--profiles", profiles_file, "official profiles JSON")->required();
    label->add_option("--phishing-threshold", phishing_threshold, "visual similarity threshold");
    label->add_option("--scam-flags", scam_flags, "min AV engines for C3/C4");
    label->add_option("--out", out, "output JSONL path")->required();

    // cluster-domains
    std::string records_file, parking_file, masked_file;
    ClusterOptions cluster_opts;
    auto* cdom = app.add_subcommand("cluster-domains", "group domains into families");
    cdom->add_option("--records", records_file, "domain records JSONL")->required();
    cdom->add_option("--parking", parking_file, "parking IP/CIDR denylist");
    cdom->add_option("--masked", masked_file, "masked registrant markers");
    cdom->add_flag("--auto-deny-ips", cluster_opts.auto_deny_common_ips,
                   "drop IPs shared by more than the auto-deny threshold");
    cdom->add_option("--auto-deny-threshold", cluster_opts.auto_deny_threshold,
                     "domain count above which an IP is dropped");
    cdom->add_option("--out", out, "output JSON path")->required();

    // cluster-apps
    std::string apps_file, official_file, certs_file;
    double app_threshold = 0.8;
    auto* capp = app.add_subcommand("cluster-apps", "detect fake apps and group them");
    capp->add_option("--apps", apps_file, "app records JSONL")->required();
    capp->add_option("--official", official_file, "official app index JSON")->required();
    capp->add_option("--common-certs", certs_file, "framework certificates to ignore");
    capp->add_option("--threshold", app_threshold, "method similarity threshold");
    capp->add_option("--out", out, "output JSON path")->required();

    // link
    std::string domains_file;
    auto* link = app.add_subcommand("link", "match app-embedded URLs against scam domains");
    link->add_option("--apps", apps_file, "app records JSONL")->required();
    link->add_option("--scam-domains", domains_file, "scam domain list")->required();
    link->add_option("--out", out, "output JSONL path")->required();

    // flow
    std::string ledger_file, addrs_file, prices_file;
    int max_hops = 3;
    auto* flow = app.add_subcommand("flow", "trace money flow around scam addresses");
    flow->add_option("--ledger", ledger_file, "transfer JSONL")->required();
    flow->add_option("--scam-addresses", addrs_file, "scam address list")->required();
    flow->add_option("--prices", prices_file, "price table JSON")->required();
    flow->add_option("--max-hops", max_hops, "fund-transfer taint depth");
    flow->add_option("--out", out, "output JSON path")->required();

    // report + run share the pipeline config
    PipelineConfig pcfg;
    auto add_pipeline_options = [&](CLI::App* cmd) {
        cmd->add_option("--targets", pcfg.targets_file, "target domain list for generate");
        cmd->add_option("--dict", pcfg.dictionary_file, "dictionary wordlist");
        cmd->add_option("--pages", pcfg.pages_file, "pages JSONL");
        cmd->add_option("--evidence", pcfg.evidence_file, "evidence JSONL");
        cmd->add_option("--profiles", pcfg.profiles_file, "official profiles JSON");
        cmd->add_option("--records", pcfg.records_file, "domain records JSONL");
        cmd->add_option("--apps", pcfg.apps_file, "app records JSONL");
        cmd->add_option("--official", pcfg.official_apps_file, "official app index JSON");
        cmd->add_option("--common-certs", pcfg.common_certs_file, "framework certificates");
        cmd->add_option("--parking", pcfg.parking_file, "parking IP denylist");
        cmd->add_option("--masked", pcfg.masked_file, "masked registrant markers");
        cmd->add_option("--scam-addresses", pcfg.scam_addresses_file, "extra scam addresses");
        cmd->add_option("--scam-domains", pcfg.scam_domains_file, "extra scam domains");
        cmd->add_option("--ledger", pcfg.ledger_file, "transfer JSONL");
        cmd->add_option("--prices", pcfg.prices_file, "price table JSON");
        cmd->add_option("--volume", pcfg.volume_file, "exchange volume JSON (optional section)");
        cmd->add_option("--out-dir", pcfg.out_dir, "output directory");
        cmd->add_option("--phishing-threshold", pcfg.phishing_threshold);
        cmd->add_option("--scam-flags", pcfg.scam_flag_threshold);
        cmd->add_option("--app-threshold", pcfg.app_similarity_threshold);
        cmd->add_option("--max-hops", pcfg.flow_max_hops);
        cmd->add_option("--top", pcfg.top_n, "rows per top-N table");
        cmd->add_flag("--extended-chains", pcfg.extended_chains);
        cmd->add_flag("--auto-deny-ips", pcfg.auto_deny_common_ips);
        cmd->add_option("--auto-deny-threshold", pcfg.auto_deny_threshold);
    };

    std::string config_file;
    auto* run = app.add_subcommand("run", "run the full pipeline from a config file");
    run->add_option("--config", config_file, "flat key=value config file");
    add_pipeline_options(run);

    std::string report_format = "text";
    auto* report_cmd = app.add_subcommand("report", "run enabled stages and print the report");
    report_cmd->add_option("--config", config_file, "flat key=value config file");
    report_cmd->add_option("--format", report_format, "json or text")->check(CLI::IsMember({"json", "text"}));
    add_pipeline_options(report_cmd);

    try {
        app.parse(argc, argv);

        if (generate->parsed()) return cmd_generate(domain, models, dict_file, out);
        if (extract->parsed()) return cmd_extract(pages, extended, out);
        if (label->parsed())
            return cmd_label(evidence_file, profiles_file, phishing_threshold, scam_flags, out);
        if (cdom->parsed())
            return cmd_cluster_domains(records_file, parking_file, masked_file, cluster_opts, out);
        if (capp->parsed())
            return cmd_cluster_apps(apps_file, official_file, certs_file, app_threshold, out);
        if (link->parsed()) return cmd_link(apps_file, domains_file, out);
        if (flow->parsed()) return cmd_flow(ledger_file, addrs_file, prices_file, max_hops, out);

        if (run->parsed() || report_cmd->parsed()) {
            if (!config_file.empty())
                apply_config_file(config_file, run->parsed() ? run : report_cmd, pcfg);
            pcfg.run_generate = !pcfg.targets_file.empty();
            pcfg.run_extract = !pcfg.pages_file.empty();
            pcfg.run_label = !pcfg.evidence_file.empty();
            pcfg.run_cluster_domains = !pcfg.records_file.empty();
            pcfg.run_cluster_apps = !pcfg.apps_file.empty() && !pcfg.official_apps_file.empty();
            pcfg.run_link = !pcfg.apps_file.empty() &&
                            (pcfg.run_label || !pcfg.scam_domains_file.empty());
            pcfg.run_flow = !pcfg.ledger_file.empty();
            Report report = run_pipeline(pcfg);
            if (report_cmd->parsed())
                std::cout << emit_report(report, report_format == "json" ? ReportFormat::json
                                                                         : ReportFormat::text);
            return 0;
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
