#include "scamscope/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace scamscope {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string out_path(const PipelineConfig& cfg, const std::string& name) {
    fs::create_directories(cfg.out_dir);
    return (fs::path(cfg.out_dir) / name).string();
}

template <typename Fn>
auto stage(const char* name, Fn&& fn) {
    try {
        return fn();
    } catch (const InputError& e) {
        throw InputError(std::string("stage ") + name + ": " + e.what());
    }
}

json family_to_json(const Family& f) {
    FamilyReportRow row = family_report(f);
    return json{{"family", row.family},
                {"urls", row.num_urls},
                {"exchanges", row.num_exchanges},
                {"targets", row.target_exchanges},
                {"category", std::string(category_tag(row.category))},
                {"shared_ips", row.shared_ips},
                {"shared_whois", row.shared_registrants},
                {"shared_addresses", row.shared_addresses},
                {"members", f.members},
                {"addresses", f.member_addresses}};
}

std::string year_of(const std::string& iso_date) {
    return iso_date.size() >= 4 ? iso_date.substr(0, 4) : iso_date;
}

bool scam_category(Category c) {
    return c == Category::c3_phishing || c == Category::c4_trading_scam ||
           c == Category::c5_referral_fraud || c == Category::c6_adult_gambling;
}

} // namespace

Report run_pipeline(const PipelineConfig& cfg) {
    FileEvidenceSource source(cfg);
    return run_pipeline(cfg, source);
}

Report run_pipeline(const PipelineConfig& cfg, EvidenceSource& source) {
    Report report;
    report.config_echo = {
        {"generate", cfg.run_generate ? "on" : "off"},
        {"extract", cfg.run_extract ? "on" : "off"},
        {"label", cfg.run_label ? "on" : "off"},
        {"cluster_domains", cfg.run_cluster_domains ? "on" : "off"},
        {"cluster_apps", cfg.run_cluster_apps ? "on" : "off"},
        {"link", cfg.run_link ? "on" : "off"},
        {"flow", cfg.run_flow ? "on" : "off"},
        {"phishing_threshold", std::to_string(cfg.phishing_threshold)},
        {"scam_flag_threshold", std::to_string(cfg.scam_flag_threshold)},
        {"app_similarity_threshold", std::to_string(cfg.app_similarity_threshold)},
        {"flow_max_hops", std::to_string(cfg.flow_max_hops)},
    };

    // ---- generate ----
    if (cfg.run_generate) {
        stage("generate", [&] {
            GeneratorConfig gen_cfg = GeneratorConfig::defaults();
            if (!cfg.dictionary_file.empty()) gen_cfg.dictionary = load_lines(cfg.dictionary_file);
            std::vector<Candidate> all;
            for (const std::string& domain : load_lines(cfg.targets_file)) {
                TargetDomain target = TargetDomain::parse(domain);
                std::vector<Candidate> candidates = generate_candidates(target, gen_cfg);
                all.insert(all.end(), candidates.begin(), candidates.end());
            }
            save_candidates(out_path(cfg, "candidates.jsonl"), all);
            report.totals["candidates_generated"] = all.size();
            return 0;
        });
    }

    // ---- extract ----
    std::vector<AddressObservation> observations;
    std::set<std::string> extracted_scam_addresses;
    std::map<std::string, std::set<std::string>> address_domains;
    if (cfg.run_extract) {
        stage("extract", [&] {
            ScanOptions scan_opts;
            scan_opts.extended_chains = cfg.extended_chains;
            for (const PageText& page : source.pages()) {
                std::vector<AddressObservation> found =
                    scan_text(page.text, page.domain, scan_opts);
                observations.insert(observations.end(), found.begin(), found.end());
            }
            std::sort(observations.begin(), observations.end(),
                      [](const AddressObservation& a, const AddressObservation& b) {
                          return std::tie(a.source_domain, a.byte_offset) <
                                 std::tie(b.source_domain, b.byte_offset);
                      });
            for (const AddressObservation& obs : observations) {
                if (obs.address.validity == Validity::invalid) continue;
                extracted_scam_addresses.insert(obs.address.raw);
                address_domains[obs.address.raw].insert(obs.source_domain);
            }
            save_observations(out_path(cfg, "addresses.jsonl"), observations);
            report.totals["addresses_observed"] = observations.size();
            report.totals["addresses_valid"] = extracted_scam_addresses.size();
            return 0;
        });
    }

    // ---- label ----
    std::vector<DomainEvidence> evidence;
    std::map<std::string, Category> labels;
    if (cfg.run_label) {
        stage("label", [&] {
            evidence = source.evidence();
            std::vector<OfficialProfile> profiles = load_profiles(cfg.profiles_file);
            LabelerConfig label_cfg;
            label_cfg.phishing_similarity_threshold = cfg.phishing_threshold;
            label_cfg.scam_flag_threshold = cfg.scam_flag_threshold;
            std::vector<json> rows;
            std::vector<const DomainEvidence*> ordered;
            for (const DomainEvidence& e : evidence) ordered.push_back(&e);
            std::sort(ordered.begin(), ordered.end(),
                      [](const DomainEvidence* a, const DomainEvidence* b) {
                          return a->domain < b->domain;
                      });
            for (const DomainEvidence* e : ordered) {
                LabelDecision decision = classify_domain(*e, profiles, label_cfg);
                labels[e->domain] = decision.category;
                rows.push_back(json{{"domain", e->domain},
                                    {"category", std::string(category_tag(decision.category))},
                                    {"reason", decision.reason}});
            }
            std::ofstream out(out_path(cfg, "labels.jsonl"), std::ios::binary);
            for (const json& row : rows) out << row.dump() << '\n';

            for (const auto& [domain, category] : labels)
                ++report.category_distribution[std::string(category_tag(category))];
            return 0;
        });
    }

    // ---- cluster domains ----
    DomainClusters domain_clusters;
    std::vector<DomainRecord> records;
    if (cfg.run_cluster_domains) {
        stage("cluster-domains", [&] {
            records = source.records();
            Denylists deny;
            if (!cfg.parking_file.empty()) deny.parking_ips = load_lines(cfg.parking_file);
            if (!cfg.masked_file.empty())
                deny.masked_registrant_markers = load_lines(cfg.masked_file);
            ClusterOptions cluster_opts;
            cluster_opts.auto_deny_common_ips = cfg.auto_deny_common_ips;
            cluster_opts.auto_deny_threshold = cfg.auto_deny_threshold;
            domain_clusters = cluster_domains(records, deny, cluster_opts);
            json doc;
            doc["families"] = json::array();
            for (const Family& f : domain_clusters.families)
                doc["families"].push_back(family_to_json(f));
            doc["isolated"] = domain_clusters.isolated;
            write_file(out_path(cfg, "families.json"), doc.dump(2) + "\n");
            report.totals["domain_families"] = domain_clusters.families.size();
            report.totals["isolated_domains"] = domain_clusters.isolated.size();
            return 0;
        });
    }

    // ---- cluster apps ----
    std::vector<AppRecord> apps;
    std::vector<AppRecord> fake_apps;
    std::map<std::string, std::string> fake_app_exchange;
    AppClusters app_clusters;
    if (cfg.run_cluster_apps || cfg.run_link) {
        stage(cfg.run_cluster_apps ? "cluster-apps" : "link", [&] {
            apps = source.apps();
            return 0;
        });
    }
    if (cfg.run_cluster_apps) {
        stage("cluster-apps", [&] {
            OfficialAppIndex official = load_official_apps(cfg.official_apps_file);
            for (const AppRecord& a : apps) {
                if (!detect_fake(a, official)) continue;
                fake_apps.push_back(a);
                const OfficialAppEntry* entry = official.match(a);
                fake_app_exchange[a.sha256] =
                    entry ? entry->exchange : a.target_exchange.value_or("");
            }
            std::set<std::string> common_certs;
            if (!cfg.common_certs_file.empty())
                for (const std::string& cert : load_lines(cfg.common_certs_file))
                    common_certs.insert(cert);
            app_clusters = cluster_apps(fake_apps, common_certs, cfg.app_similarity_threshold);

            json doc;
            doc["fake_apps"] = json::array();
            for (const AppRecord& a : fake_apps) doc["fake_apps"].push_back(a.sha256);
            doc["families"] = json::array();
            for (const AppFamily& f : app_clusters.families)
                doc["families"].push_back(json{{"members", f.members},
                                               {"shared_certs", f.shared_certs},
                                               {"similarity_core", f.similarity_core}});
            doc["isolated"] = app_clusters.isolated;
            write_file(out_path(cfg, "appfamilies.json"), doc.dump(2) + "\n");
            report.totals["fake_apps"] = fake_apps.size();
            report.totals["app_families"] = app_clusters.families.size();
            report.totals["isolated_apps"] = app_clusters.isolated.size();
            return 0;
        });
    }

    // ---- link ----
    LinkResult links;
    if (cfg.run_link) {
        stage("link", [&] {
            std::set<std::string> scam_domains;
            for (const auto& [domain, category] : labels)
                if (scam_category(category)) scam_domains.insert(domain);
            if (!cfg.scam_domains_file.empty())
                for (const std::string& d : load_lines(cfg.scam_domains_file))
                    scam_domains.insert(d);
            const std::vector<AppRecord>& link_input = cfg.run_cluster_apps ? fake_apps : apps;
            links = link_apps_to_domains(link_input, scam_domains);
            std::ofstream out(out_path(cfg, "links.jsonl"), std::ios::binary);
            for (const AppDomainLink& link : links.links)
                out << json{{"sha256", link.sha256}, {"url", link.url}, {"domain", link.domain}}
                           .dump()
                    << '\n';
            report.totals["app_domain_links"] = links.links.size();
            return 0;
        });
    }

    // ---- flow ----
    std::vector<TransferRecord> ledger;
    RoleResult roles;
    std::vector<SharedTransferRow> shared;
    std::vector<FamilyFlowRow> family_rows;
    std::set<std::string> scam_addresses = extracted_scam_addresses;
    PriceTable prices;
    if (cfg.run_flow) {
        stage("flow", [&] {
            ledger = source.ledger();
            prices = load_prices(cfg.prices_file);
            if (!cfg.scam_addresses_file.empty())
                for (const std::string& a : load_lines(cfg.scam_addresses_file))
                    scam_addresses.insert(a);
            if (scam_addresses.empty())
                throw InputError("no scam addresses: enable extract or pass a file");
            FlowOptions flow_opts;
            flow_opts.max_hops = cfg.flow_max_hops;
            roles = classify_roles(ledger, scam_addresses, flow_opts);
            shared = shared_transfer_report(ledger, scam_addresses, prices, flow_opts);
            family_rows = family_flow(domain_clusters.families, ledger, prices);

            json doc;
            json role_json = json::object();
            std::map<std::string, size_t> role_counts;
            for (const auto& [address, role] : roles.roles) {
                role_json[address] = std::string(role_tag(role));
                ++role_counts[std::string(role_tag(role))];
            }
            doc["roles_by_address"] = role_json;
            doc["silent_scam"] = roles.silent_scam;

            std::map<Chain, Decimal> grand_total;
            json per_address = json::array();
            for (const std::string& address : scam_addresses) {
                ReceivedTotal t = total_received(ledger, address);
                if (t.tx_count == 0) continue;
                json native = json::object();
                for (const auto& [chain, amount] : t.native) {
                    native[std::string(chain_tag(chain))] = amount.str();
                    grand_total[chain] += amount;
                }
                per_address.push_back(json{{"address", address},
                                           {"tx_count", t.tx_count},
                                           {"native", native},
                                           {"usd", fiat_value(t.native, prices).fixed(2)}});
            }
            doc["per_scam_address"] = per_address;
            json totals_native = json::object();
            for (const auto& [chain, amount] : grand_total)
                totals_native[std::string(chain_tag(chain))] = amount.str();
            doc["total_native"] = totals_native;
            doc["total_usd"] = fiat_value(grand_total, prices).fixed(2);

            json shared_json = json::array();
            for (const SharedTransferRow& row : shared)
                shared_json.push_back(json{{"fund_transfer_address", row.address},
                                           {"scam_addresses", row.scam_senders},
                                           {"tx_count", row.tx_count},
                                           {"usd", row.total_usd.fixed(2)},
                                           {"fully_drained", row.fully_drained}});
            doc["shared_fund_transfers"] = shared_json;

            json families_json = json::array();
            for (const FamilyFlowRow& row : family_rows) {
                json native = json::object();
                for (const auto& [chain, amount] : row.native)
                    native[std::string(chain_tag(chain))] = amount.str();
                families_json.push_back(json{{"family", row.family},
                                             {"addresses", row.addresses},
                                             {"tx_count", row.tx_count},
                                             {"native", native},
                                             {"usd", row.usd.fixed(2)}});
            }
            doc["family_flow"] = families_json;
            write_file(out_path(cfg, "flow.json"), doc.dump(2) + "\n");

            for (const auto& [tag, n] : role_counts) report.role_counts[tag] = n;
            report.silent_scam = roles.silent_scam;
            report.total_received_usd = fiat_value(grand_total, prices).fixed(2);
            return 0;
        });
    }

    // ---- report assembly ----
    std::map<std::string, std::string> domain_exchange;
    for (const DomainEvidence& e : evidence)
        if (e.target_exchange) domain_exchange[e.domain] = *e.target_exchange;
    for (const DomainRecord& r : records)
        if (r.target_exchange) domain_exchange.emplace(r.domain, *r.target_exchange);

    {
        std::map<std::string, Report::ExchangeCount> per_exchange;
        for (const auto& [domain, category] : labels) {
            if (!scam_category(category)) continue;
            auto it = domain_exchange.find(domain);
            if (it == domain_exchange.end()) continue;
            per_exchange[it->second].exchange = it->second;
            ++per_exchange[it->second].mal_urls;
        }
        for (const auto& [sha, exchange] : fake_app_exchange) {
            if (exchange.empty()) continue;
            per_exchange[exchange].exchange = exchange;
            ++per_exchange[exchange].fake_apps;
        }
        for (const auto& [name, row] : per_exchange) report.per_exchange.push_back(row);
    }

    {
        std::vector<const DomainEvidence*> flagged;
        for (const DomainEvidence& e : evidence)
            if (e.av_flag_count > 0) flagged.push_back(&e);
        std::sort(flagged.begin(), flagged.end(),
                  [](const DomainEvidence* a, const DomainEvidence* b) {
                      if (a->av_flag_count != b->av_flag_count)
                          return a->av_flag_count > b->av_flag_count;
                      return a->domain < b->domain;
                  });
        for (const DomainEvidence* e : flagged) {
            if (report.top_flagged_domains.size() >= cfg.top_n) break;
            std::string category;
            if (auto it = labels.find(e->domain); it != labels.end())
                category = category_tag(it->second);
            report.top_flagged_domains.push_back(
                {e->domain, e->target_exchange.value_or(""), e->av_flag_count, category});
        }
    }

    {
        std::vector<const AppRecord*> flagged;
        for (const AppRecord& a : fake_apps)
            if (a.av_flag_count > 0) flagged.push_back(&a);
        std::sort(flagged.begin(), flagged.end(), [](const AppRecord* a, const AppRecord* b) {
            if (a->av_flag_count != b->av_flag_count) return a->av_flag_count > b->av_flag_count;
            return a->sha256 < b->sha256;
        });
        for (const AppRecord* a : flagged) {
            if (report.top_flagged_apps.size() >= cfg.top_n) break;
            report.top_flagged_apps.push_back(
                {a->app_name, fake_app_exchange[a->sha256], a->sha256, a->av_flag_count});
        }
    }

    for (const Family& f : domain_clusters.families)
        report.domain_families.push_back(family_report(f));

    for (const AppFamily& f : app_clusters.families) {
        Report::AppFamilyRow row;
        row.id = f.members.front();
        row.size = f.members.size();
        row.shared_certs.assign(f.shared_certs.begin(), f.shared_certs.end());
        row.similarity_core = f.similarity_core;
        report.app_families.push_back(std::move(row));
    }

    if (cfg.run_flow) {
        struct Ranked {
            std::string address;
            ReceivedTotal total;
            Decimal usd;
        };
        std::vector<Ranked> ranked;
        for (const std::string& address : scam_addresses) {
            ReceivedTotal t = total_received(ledger, address);
            if (t.tx_count == 0) continue;
            ranked.push_back({address, t, fiat_value(t.native, prices)});
        }
        std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
            if (a.usd != b.usd) return a.usd > b.usd;
            return a.address < b.address;
        });
        for (const Ranked& row : ranked) {
            if (report.top_addresses.size() >= cfg.top_n) break;
            Report::ProfitableAddress out;
            out.address = row.address;
            std::vector<std::string> natives;
            for (const auto& [chain, amount] : row.total.native) {
                out.chain = chain_tag(chain);
                natives.push_back(amount.str() + " " + std::string(chain_tag(chain)));
            }
            std::ostringstream native;
            for (size_t i = 0; i < natives.size(); ++i)
                native << (i ? ", " : "") << natives[i];
            out.native_total = native.str();
            if (auto it = address_domains.find(row.address); it != address_domains.end())
                out.domains.assign(it->second.begin(), it->second.end());
            out.tx_count = row.total.tx_count;
            out.usd = row.usd.fixed(2);
            report.top_addresses.push_back(std::move(out));
        }

        std::map<std::string, const Family*> family_by_id;
        for (const Family& f : domain_clusters.families) family_by_id[f.id] = &f;
        for (const FamilyFlowRow& row : family_rows) {
            if (report.top_families.size() >= cfg.top_n) break;
            if (row.tx_count == 0) continue;
            Report::ProfitableFamily out;
            out.family = row.family;
            out.num_domains = family_by_id.count(row.family)
                                  ? family_by_id[row.family]->members.size()
                                  : 0;
            out.num_addresses = row.addresses.size();
            out.tx_count = row.tx_count;
            for (const auto& [chain, amount] : row.native)
                out.native[std::string(chain_tag(chain))] = amount.str();
            out.usd = row.usd.fixed(2);
            report.top_families.push_back(std::move(out));
        }

        for (const SharedTransferRow& row : shared) {
            Report::SharedTransfer out;
            out.address = row.address;
            out.scam_senders = row.scam_senders;
            out.tx_count = row.tx_count;
            out.usd = row.total_usd.fixed(2);
            out.fully_drained = row.fully_drained;
            report.shared_transfers.push_back(std::move(out));
        }
    }

    {
        std::map<std::string, std::string> created;
        for (const DomainEvidence& e : evidence)
            if (e.whois_created) created[e.domain] = *e.whois_created;
        for (const DomainRecord& r : records)
            if (r.whois_created) created.emplace(r.domain, *r.whois_created);
        for (const auto& [domain, date] : created) ++report.creation_histogram[year_of(date)];
    }

    if (!cfg.volume_file.empty()) {
        json doc;
        try {
            doc = json::parse(read_file(cfg.volume_file));
        } catch (const json::exception& e) {
            throw InputError(cfg.volume_file + ": " + e.what());
        }
        std::map<std::string, size_t> mal_urls;
        for (const auto& e : report.per_exchange) mal_urls[e.exchange] = e.mal_urls;
        for (const auto& [exchange, volume] : doc.items()) {
            std::string v = volume.is_string() ? volume.get<std::string>() : volume.dump();
            report.volume_vs_scams.push_back({exchange, v, mal_urls[exchange]});
        }
    }

    if (cfg.run_label) {
        size_t total = 0, scam = 0;
        for (const auto& [domain, category] : labels) {
            ++total;
            if (scam_category(category)) ++scam;
        }
        report.totals["domains_labeled"] = total;
        report.totals["scam_domains"] = scam;
    }

    write_file(out_path(cfg, "report.json"), emit_report(report, ReportFormat::json));
    write_file(out_path(cfg, "report.txt"), emit_report(report, ReportFormat::text));
    return report;
}

} // namespace scamscope
