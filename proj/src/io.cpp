#include "scamscope/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <functional>
#include <sstream>

namespace scamscope {

using nlohmann::json;

namespace {

json parse_line(const std::string& path, size_t line_no, const std::string& line) {
    try {
        return json::parse(line);
    } catch (const json::exception& e) {
        throw InputError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
}

// wraps field access errors with file/line context
template <typename Fn>
auto with_context(const std::string& path, size_t line_no, Fn&& fn) {
    try {
        return fn();
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
}

void for_each_jsonl(const std::string& path,
                    const std::function<void(size_t, const json&)>& fn) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        json j = parse_line(path, line_no, line);
        with_context(path, line_no, [&] { fn(line_no, j); });
    }
}

json parse_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string require_string(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw std::runtime_error(std::string("missing or non-string field '") + key + "'");
    return j[key].get<std::string>();
}

std::optional<std::string> optional_string(const json& j, const char* key) {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    if (!j[key].is_string())
        throw std::runtime_error(std::string("non-string field '") + key + "'");
    return j[key].get<std::string>();
}

std::set<std::string> string_set(const json& j, const char* key) {
    std::set<std::string> out;
    if (!j.contains(key) || j[key].is_null()) return out;
    for (const auto& item : j[key]) out.insert(item.get<std::string>());
    return out;
}

std::vector<std::string> string_vector(const json& j, const char* key) {
    std::vector<std::string> out;
    if (!j.contains(key) || j[key].is_null()) return out;
    for (const auto& item : j[key]) out.push_back(item.get<std::string>());
    return out;
}

// amounts and prices accept strings (preferred, exact) or JSON numbers
Decimal decimal_field(const json& j, const char* key) {
    if (!j.contains(key))
        throw std::runtime_error(std::string("missing amount field '") + key + "'");
    const json& v = j[key];
    if (v.is_string()) return Decimal::parse(v.get<std::string>());
    if (v.is_number()) return Decimal::parse(v.dump());
    throw std::runtime_error(std::string("field '") + key + "' is not a decimal");
}

void write_jsonl(const std::string& path, const std::vector<json>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    for (const json& row : rows) out << row.dump() << '\n';
}

} // namespace

Schema schema_from_id(const std::string& id) {
    if (id == "pages") return Schema::pages;
    if (id == "evidence") return Schema::evidence;
    if (id == "profiles") return Schema::profiles;
    if (id == "records") return Schema::records;
    if (id == "apps") return Schema::apps;
    if (id == "official-apps") return Schema::official_apps;
    if (id == "ledger") return Schema::ledger;
    if (id == "prices") return Schema::prices;
    throw InputError("unknown schema id: " + id);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path);
    out << content;
}

std::vector<std::string> load_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        size_t e = line.find_last_not_of(" \t");
        line = line.substr(b, e - b + 1);
        if (line.empty() || line[0] == '#') continue;
        out.push_back(line);
    }
    return out;
}

std::vector<PageText> load_pages(const std::string& path) {
    std::vector<PageText> out;
    for_each_jsonl(path, [&](size_t, const json& j) {
        out.push_back(PageText{require_string(j, "domain"), require_string(j, "text")});
    });
    return out;
}

std::vector<DomainEvidence> load_evidence(const std::string& path) {
    std::vector<DomainEvidence> out;
    for_each_jsonl(path, [&](size_t, const json& j) {
        DomainEvidence e;
        e.domain = require_string(j, "domain");
        e.reachable = j.value("reachable", false);
        e.blank_page = j.value("blank_page", false);
        e.landing_url = optional_string(j, "landing_url");
        e.redirect_chain = string_vector(j, "redirect_chain");
        e.page_text = j.value("page_text", std::string());
        e.page_hash = j.value("page_hash", std::string());
        e.parking_fingerprint = optional_string(j, "parking_fingerprint");
        e.av_flag_count = j.value("av_flag_count", 0);
        if (e.av_flag_count < 0) throw std::runtime_error("av_flag_count must be >= 0");
        e.content_tags = string_set(j, "content_tags");
        if (j.contains("visual_similarity") && !j["visual_similarity"].is_null())
            e.visual_similarity = j["visual_similarity"].get<double>();
        if (auto manual = optional_string(j, "manual_label"))
            e.manual_label = category_from_tag(*manual);
        e.target_exchange = optional_string(j, "target_exchange");
        e.whois_created = optional_string(j, "whois_created");
        if (e.landing_url && !e.reachable)
            throw std::runtime_error("landing_url present on unreachable domain");
        out.push_back(std::move(e));
    });
    return out;
}

std::vector<DomainRecord> load_domain_records(const std::string& path) {
    std::vector<DomainRecord> out;
    for_each_jsonl(path, [&](size_t, const json& j) {
        DomainRecord r;
        r.domain = require_string(j, "domain");
        if (auto cat = optional_string(j, "category")) r.category = category_from_tag(*cat);
        r.ip_history = string_set(j, "ips");
        r.registrant = optional_string(j, "registrant");
        r.addresses = string_set(j, "addresses");
        r.target_exchange = optional_string(j, "target_exchange");
        r.whois_created = optional_string(j, "whois_created");
        out.push_back(std::move(r));
    });
    return out;
}

std::vector<AppRecord> load_apps(const std::string& path) {
    std::vector<AppRecord> out;
    for_each_jsonl(path, [&](size_t, const json& j) {
        AppRecord a;
        a.sha256 = require_string(j, "sha256");
        if (a.sha256.size() != 64) throw std::runtime_error("sha256 must be 64 hex chars");
        a.app_name = j.value("app_name", std::string());
        a.package_name = j.value("package_name", std::string());
        a.cert_sha1 = require_string(j, "cert_sha1");
        if (a.cert_sha1.size() != 40) throw std::runtime_error("cert_sha1 must be 40 hex chars");
        a.method_set = string_set(j, "methods");
        a.embedded_urls = string_set(j, "urls");
        a.av_tags = string_set(j, "av_tags");
        a.av_flag_count = j.value("av_flag_count", 0);
        a.target_exchange = optional_string(j, "target_exchange");
        out.push_back(std::move(a));
    });
    return out;
}

std::vector<TransferRecord> load_ledger(const std::string& path) {
    std::vector<TransferRecord> out;
    for_each_jsonl(path, [&](size_t, const json& j) {
        TransferRecord t;
        t.chain = chain_from_tag(require_string(j, "chain"));
        t.tx_id = j.value("tx", std::string());
        t.sender = require_string(j, "from");
        t.receiver = require_string(j, "to");
        t.amount = decimal_field(j, "amount");
        if (t.amount.negative()) throw std::runtime_error("amount must be >= 0");
        t.timestamp = j.value("ts", int64_t{0});
        t.is_change = j.value("is_change", false);
        out.push_back(std::move(t));
    });
    return out;
}

std::vector<OfficialProfile> load_profiles(const std::string& path) {
    json doc = parse_document(path);
    std::vector<OfficialProfile> out;
    try {
        for (const json& j : doc.at("profiles")) {
            OfficialProfile p;
            p.exchange = require_string(j, "exchange");
            p.domains = string_vector(j, "domains");
            if (p.domains.empty())
                throw std::runtime_error("profile '" + p.exchange + "' has no domains");
            p.page_hashes = string_vector(j, "page_hashes");
            if (j.contains("referral_params")) p.referral_params = string_vector(j, "referral_params");
            out.push_back(std::move(p));
        }
    } catch (const std::exception& e) {
        throw InputError(path + ": " + e.what());
    }
    return out;
}

OfficialAppIndex load_official_apps(const std::string& path) {
    json doc = parse_document(path);
    OfficialAppIndex idx;
    try {
        for (const json& j : doc.at("apps")) {
            OfficialAppEntry e;
            e.exchange = require_string(j, "exchange");
            e.package_name = j.value("package_name", std::string());
            e.app_name = j.value("app_name", std::string());
            for (const auto& c : j.at("certs")) {
                std::string cert = c.get<std::string>();
                std::transform(cert.begin(), cert.end(), cert.begin(),
                               [](unsigned char ch) { return std::tolower(ch); });
                e.certs.insert(cert);
            }
            if (e.certs.empty())
                throw std::runtime_error("official app entry without certificates");
            idx.entries.push_back(std::move(e));
        }
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(path + ": " + e.what());
    }
    return idx;
}

PriceTable load_prices(const std::string& path) {
    json doc = parse_document(path);
    PriceTable table;
    try {
        table.as_of = doc.value("as_of", std::string());
        static const std::map<std::string, Chain> kAliases = {
            {"btc", Chain::bitcoin},       {"bitcoin", Chain::bitcoin},
            {"eth", Chain::ethereum},      {"ethereum", Chain::ethereum},
            {"xrp", Chain::xrp},           {"tron", Chain::tron},
            {"neo", Chain::neo},           {"bnb", Chain::binance_coin},
            {"binance-coin", Chain::binance_coin},
        };
        for (const auto& [key, value] : doc.items()) {
            if (key == "as_of") continue;
            auto it = kAliases.find(key);
            if (it == kAliases.end()) throw std::runtime_error("unknown chain key: " + key);
            Decimal price = value.is_string() ? Decimal::parse(value.get<std::string>())
                                              : Decimal::parse(value.dump());
            if (!(price > Decimal())) throw std::runtime_error("price for " + key + " must be > 0");
            table.usd[it->second] = price;
        }
    } catch (const std::exception& e) {
        throw InputError(path + ": " + e.what());
    }
    return table;
}

namespace {

json optional_to_json(const std::optional<std::string>& v) {
    return v ? json(*v) : json(nullptr);
}

} // namespace

json evidence_to_json(const DomainEvidence& e) {
    json j;
    j["domain"] = e.domain;
    j["reachable"] = e.reachable;
    j["blank_page"] = e.blank_page;
    if (e.landing_url) j["landing_url"] = *e.landing_url;
    if (!e.redirect_chain.empty()) j["redirect_chain"] = e.redirect_chain;
    if (!e.page_text.empty()) j["page_text"] = e.page_text;
    if (!e.page_hash.empty()) j["page_hash"] = e.page_hash;
    if (e.parking_fingerprint) j["parking_fingerprint"] = *e.parking_fingerprint;
    if (e.av_flag_count != 0) j["av_flag_count"] = e.av_flag_count;
    if (!e.content_tags.empty()) j["content_tags"] = e.content_tags;
    if (e.visual_similarity) j["visual_similarity"] = *e.visual_similarity;
    if (e.manual_label) j["manual_label"] = std::string(category_tag(*e.manual_label));
    if (e.target_exchange) j["target_exchange"] = *e.target_exchange;
    if (e.whois_created) j["whois_created"] = *e.whois_created;
    return j;
}

json record_to_json(const DomainRecord& r) {
    json j;
    j["domain"] = r.domain;
    j["category"] = std::string(category_tag(r.category));
    if (!r.ip_history.empty()) j["ips"] = r.ip_history;
    if (r.registrant) j["registrant"] = *r.registrant;
    if (!r.addresses.empty()) j["addresses"] = r.addresses;
    if (r.target_exchange) j["target_exchange"] = *r.target_exchange;
    if (r.whois_created) j["whois_created"] = *r.whois_created;
    return j;
}

json app_to_json(const AppRecord& a) {
    json j;
    j["sha256"] = a.sha256;
    j["app_name"] = a.app_name;
    j["package_name"] = a.package_name;
    j["cert_sha1"] = a.cert_sha1;
    if (!a.method_set.empty()) j["methods"] = a.method_set;
    if (!a.embedded_urls.empty()) j["urls"] = a.embedded_urls;
    if (!a.av_tags.empty()) j["av_tags"] = a.av_tags;
    if (a.av_flag_count != 0) j["av_flag_count"] = a.av_flag_count;
    if (a.target_exchange) j["target_exchange"] = *a.target_exchange;
    return j;
}

json transfer_to_json(const TransferRecord& t) {
    json j;
    j["chain"] = std::string(chain_tag(t.chain));
    j["tx"] = t.tx_id;
    j["from"] = t.sender;
    j["to"] = t.receiver;
    j["amount"] = t.amount.str();
    j["ts"] = t.timestamp;
    if (t.is_change) j["is_change"] = true;
    return j;
}

void save_pages(const std::string& path, const std::vector<PageText>& v) {
    std::vector<json> rows;
    for (const PageText& p : v) rows.push_back(json{{"domain", p.domain}, {"text", p.text}});
    write_jsonl(path, rows);
}

void save_evidence(const std::string& path, const std::vector<DomainEvidence>& v) {
    std::vector<json> rows;
    for (const DomainEvidence& e : v) rows.push_back(evidence_to_json(e));
    write_jsonl(path, rows);
}

void save_domain_records(const std::string& path, const std::vector<DomainRecord>& v) {
    std::vector<json> rows;
    for (const DomainRecord& r : v) rows.push_back(record_to_json(r));
    write_jsonl(path, rows);
}

void save_apps(const std::string& path, const std::vector<AppRecord>& v) {
    std::vector<json> rows;
    for (const AppRecord& a : v) rows.push_back(app_to_json(a));
    write_jsonl(path, rows);
}

void save_ledger(const std::string& path, const std::vector<TransferRecord>& v) {
    std::vector<json> rows;
    for (const TransferRecord& t : v) rows.push_back(transfer_to_json(t));
    write_jsonl(path, rows);
}

void save_candidates(const std::string& path, const std::vector<Candidate>& v) {
    std::vector<json> rows;
    for (const Candidate& c : v)
        rows.push_back(json{{"target", c.target.fqdn()},
                            {"model", std::string(model_tag(c.model))},
                            {"unicode", c.unicode_form},
                            {"ascii", c.ascii_form}});
    write_jsonl(path, rows);
}

void save_observations(const std::string& path, const std::vector<AddressObservation>& v) {
    std::vector<json> rows;
    for (const AddressObservation& o : v)
        rows.push_back(json{{"domain", o.source_domain},
                            {"chain", std::string(chain_tag(o.address.chain))},
                            {"address", o.address.raw},
                            {"validity", std::string(validity_tag(o.address.validity))},
                            {"offset", o.byte_offset}});
    write_jsonl(path, rows);
}

bool operator==(const DomainEvidence& a, const DomainEvidence& b) {
    return evidence_to_json(a) == evidence_to_json(b);
}

bool operator==(const DomainRecord& a, const DomainRecord& b) {
    return record_to_json(a) == record_to_json(b);
}

bool operator==(const AppRecord& a, const AppRecord& b) {
    return app_to_json(a) == app_to_json(b);
}

bool operator==(const TransferRecord& a, const TransferRecord& b) {
    return transfer_to_json(a) == transfer_to_json(b);
}

} // namespace scamscope
