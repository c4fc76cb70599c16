#include "scamscope/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace scamscope {

using nlohmann::json;

namespace {

json counts_to_json(const std::map<std::string, size_t>& counts) {
    json j = json::object();
    for (const auto& [k, v] : counts) j[k] = v;
    return j;
}

std::map<std::string, size_t> counts_from_json(const json& j) {
    std::map<std::string, size_t> out;
    for (const auto& [k, v] : j.items()) out[k] = v.get<size_t>();
    return out;
}

} // namespace

json report_to_json(const Report& r) {
    json j;
    j["config"] = r.config_echo;
    j["category_distribution"] = counts_to_json(r.category_distribution);

    json per_exchange = json::array();
    for (const auto& e : r.per_exchange)
        per_exchange.push_back(
            json{{"exchange", e.exchange}, {"mal_urls", e.mal_urls}, {"fake_apps", e.fake_apps}});
    j["per_exchange"] = per_exchange;

    json flagged_domains = json::array();
    for (const auto& d : r.top_flagged_domains)
        flagged_domains.push_back(json{{"domain", d.domain},
                                       {"exchange", d.exchange},
                                       {"engines", d.engines},
                                       {"category", d.category}});
    j["top_flagged_domains"] = flagged_domains;

    json flagged_apps = json::array();
    for (const auto& a : r.top_flagged_apps)
        flagged_apps.push_back(json{{"app_name", a.app_name},
                                    {"exchange", a.exchange},
                                    {"sha256", a.sha256},
                                    {"engines", a.engines}});
    j["top_flagged_apps"] = flagged_apps;

    json families = json::array();
    for (const auto& f : r.domain_families)
        families.push_back(json{{"family", f.family},
                                {"urls", f.num_urls},
                                {"exchanges", f.num_exchanges},
                                {"targets", f.target_exchanges},
                                {"category", std::string(category_tag(f.category))},
                                {"shared_ips", f.shared_ips},
                                {"shared_whois", f.shared_registrants},
                                {"shared_addresses", f.shared_addresses}});
    j["domain_families"] = families;

    json app_families = json::array();
    for (const auto& f : r.app_families)
        app_families.push_back(json{{"id", f.id},
                                    {"size", f.size},
                                    {"shared_certs", f.shared_certs},
                                    {"similarity_core", f.similarity_core}});
    j["app_families"] = app_families;

    json addresses = json::array();
    for (const auto& a : r.top_addresses)
        addresses.push_back(json{{"address", a.address},
                                 {"chain", a.chain},
                                 {"domains", a.domains},
                                 {"tx_count", a.tx_count},
                                 {"total_received", a.native_total},
                                 {"usd", a.usd}});
    j["top_addresses"] = addresses;

    json profitable = json::array();
    for (const auto& f : r.top_families)
        profitable.push_back(json{{"family", f.family},
                                  {"domains", f.num_domains},
                                  {"addresses", f.num_addresses},
                                  {"tx_count", f.tx_count},
                                  {"total_received", f.native},
                                  {"usd", f.usd}});
    j["top_families"] = profitable;

    json transfers = json::array();
    for (const auto& t : r.shared_transfers)
        transfers.push_back(json{{"fund_transfer_address", t.address},
                                 {"scam_addresses", t.scam_senders},
                                 {"tx_count", t.tx_count},
                                 {"usd", t.usd},
                                 {"fully_drained", t.fully_drained}});
    j["shared_fund_transfers"] = transfers;

    j["role_counts"] = counts_to_json(r.role_counts);
    j["silent_scam"] = r.silent_scam;
    j["creation_histogram"] = counts_to_json(r.creation_histogram);
    j["totals"] = counts_to_json(r.totals);
    j["total_received_usd"] = r.total_received_usd;

    if (!r.volume_vs_scams.empty()) {
        json volume = json::array();
        for (const auto& v : r.volume_vs_scams)
            volume.push_back(json{{"exchange", v.exchange},
                                  {"volume", v.volume},
                                  {"mal_urls", v.mal_urls}});
        j["volume_vs_scams"] = volume;
    }
    return j;
}

Report report_from_json(const json& j) {
    Report r;
    for (const auto& [k, v] : j.at("config").items()) r.config_echo[k] = v.get<std::string>();
    r.category_distribution = counts_from_json(j.at("category_distribution"));
    for (const json& e : j.at("per_exchange"))
        r.per_exchange.push_back(
            {e.at("exchange"), e.at("mal_urls").get<size_t>(), e.at("fake_apps").get<size_t>()});
    for (const json& d : j.at("top_flagged_domains"))
        r.top_flagged_domains.push_back(
            {d.at("domain"), d.at("exchange"), d.at("engines").get<int>(), d.at("category")});
    for (const json& a : j.at("top_flagged_apps"))
        r.top_flagged_apps.push_back(
            {a.at("app_name"), a.at("exchange"), a.at("sha256"), a.at("engines").get<int>()});
    for (const json& f : j.at("domain_families")) {
        FamilyReportRow row;
        row.family = f.at("family");
        row.num_urls = f.at("urls").get<size_t>();
        row.num_exchanges = f.at("exchanges").get<size_t>();
        for (const auto& t : f.at("targets")) row.target_exchanges.insert(t.get<std::string>());
        row.category = category_from_tag(f.at("category").get<std::string>());
        for (const auto& x : f.at("shared_ips")) row.shared_ips.insert(x.get<std::string>());
        for (const auto& x : f.at("shared_whois"))
            row.shared_registrants.insert(x.get<std::string>());
        for (const auto& x : f.at("shared_addresses"))
            row.shared_addresses.insert(x.get<std::string>());
        r.domain_families.push_back(std::move(row));
    }
    for (const json& f : j.at("app_families")) {
        Report::AppFamilyRow row;
        row.id = f.at("id");
        row.size = f.at("size").get<size_t>();
        for (const auto& c : f.at("shared_certs")) row.shared_certs.push_back(c.get<std::string>());
        row.similarity_core = f.at("similarity_core").get<bool>();
        r.app_families.push_back(std::move(row));
    }
    for (const json& a : j.at("top_addresses")) {
        Report::ProfitableAddress row;
        row.address = a.at("address");
        row.chain = a.at("chain");
        for (const auto& d : a.at("domains")) row.domains.push_back(d.get<std::string>());
        row.tx_count = a.at("tx_count").get<size_t>();
        row.native_total = a.at("total_received");
        row.usd = a.at("usd");
        r.top_addresses.push_back(std::move(row));
    }
    for (const json& f : j.at("top_families")) {
        Report::ProfitableFamily row;
        row.family = f.at("family");
        row.num_domains = f.at("domains").get<size_t>();
        row.num_addresses = f.at("addresses").get<size_t>();
        row.tx_count = f.at("tx_count").get<size_t>();
        for (const auto& [chain, amount] : f.at("total_received").items())
            row.native[chain] = amount.get<std::string>();
        row.usd = f.at("usd");
        r.top_families.push_back(std::move(row));
    }
    for (const json& t : j.at("shared_fund_transfers")) {
        Report::SharedTransfer row;
        row.address = t.at("fund_transfer_address");
        for (const auto& s : t.at("scam_addresses"))
            row.scam_senders.push_back(s.get<std::string>());
        row.tx_count = t.at("tx_count").get<size_t>();
        row.usd = t.at("usd");
        row.fully_drained = t.at("fully_drained").get<bool>();
        r.shared_transfers.push_back(std::move(row));
    }
    r.role_counts = counts_from_json(j.at("role_counts"));
    for (const auto& s : j.at("silent_scam")) r.silent_scam.push_back(s.get<std::string>());
    r.creation_histogram = counts_from_json(j.at("creation_histogram"));
    r.totals = counts_from_json(j.at("totals"));
    r.total_received_usd = j.at("total_received_usd");
    if (j.contains("volume_vs_scams"))
        for (const json& v : j.at("volume_vs_scams"))
            r.volume_vs_scams.push_back(
                {v.at("exchange"), v.at("volume"), v.at("mal_urls").get<size_t>()});
    return r;
}

bool operator==(const Report& a, const Report& b) {
    return report_to_json(a) == report_to_json(b);
}

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string join(const std::set<std::string>& parts, const std::string& sep) {
    return join(std::vector<std::string>(parts.begin(), parts.end()), sep);
}

// fixed-width text table with a header rule
class TextTable {
public:
    explicit TextTable(std::vector<std::string> headers) : headers_(std::move(headers)) {}

    void add_row(std::vector<std::string> row) {
        row.resize(headers_.size());
        rows_.push_back(std::move(row));
    }

    std::string str() const {
        std::vector<size_t> widths(headers_.size());
        for (size_t c = 0; c < headers_.size(); ++c) widths[c] = headers_[c].size();
        for (const auto& row : rows_)
            for (size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
        std::ostringstream out;
        auto emit = [&](const std::vector<std::string>& row) {
            for (size_t c = 0; c < row.size(); ++c) {
                out << std::left << std::setw(static_cast<int>(widths[c])) << row[c];
                out << (c + 1 == row.size() ? "" : "  ");
            }
            out << '\n';
        };
        emit(headers_);
        size_t total = 0;
        for (size_t w : widths) total += w + 2;
        out << std::string(total > 2 ? total - 2 : total, '-') << '\n';
        for (const auto& row : rows_) emit(row);
        return out.str();
    }

private:
    std::vector<std::string> headers_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace

std::string report_to_text(const Report& r) {
    std::ostringstream out;
    out << "scamscope report\n================\n\n";

    if (!r.category_distribution.empty()) {
        out << "Category distribution\n";
        TextTable t({"category", "count"});
        for (const auto& [tag, n] : r.category_distribution) t.add_row({tag, std::to_string(n)});
        out << t.str() << '\n';
    }

    if (!r.per_exchange.empty()) {
        out << "Per-exchange results\n";
        TextTable t({"exchange", "#mal urls", "#fake apps"});
        for (const auto& e : r.per_exchange)
            t.add_row({e.exchange, std::to_string(e.mal_urls), std::to_string(e.fake_apps)});
        out << t.str() << '\n';
    }

    if (!r.top_flagged_domains.empty()) {
        out << "Top flagged domains\n";
        TextTable t({"domain", "target exchange", "#engines", "category"});
        for (const auto& d : r.top_flagged_domains)
            t.add_row({d.domain, d.exchange, std::to_string(d.engines), d.category});
        out << t.str() << '\n';
    }

    if (!r.domain_families.empty()) {
        out << "Domain families\n";
        TextTable t({"family", "#urls", "#exchanges", "targets", "category", "shared ips",
                     "shared whois", "shared addresses"});
        size_t shown = 0;
        for (const auto& f : r.domain_families) {
            if (++shown > 15) break;
            t.add_row({f.family, std::to_string(f.num_urls), std::to_string(f.num_exchanges),
                       join(f.target_exchanges, ","), std::string(category_tag(f.category)),
                       join(f.shared_ips, ","), join(f.shared_registrants, ","),
                       join(f.shared_addresses, ",")});
        }
        out << t.str() << '\n';
    }

    if (!r.top_addresses.empty()) {
        out << "Top profitable addresses\n";
        TextTable t({"address", "chain", "scam domains", "#tx", "total received", "usd"});
        for (const auto& a : r.top_addresses)
            t.add_row({a.address, a.chain, join(a.domains, ","), std::to_string(a.tx_count),
                       a.native_total, a.usd});
        out << t.str() << '\n';
    }

    if (!r.top_families.empty()) {
        out << "Top profitable families\n";
        TextTable t({"family", "#domains", "#addresses", "#tx", "total received", "usd"});
        for (const auto& f : r.top_families) {
            std::vector<std::string> native;
            for (const auto& [chain, amount] : f.native) native.push_back(amount + " " + chain);
            t.add_row({f.family, std::to_string(f.num_domains), std::to_string(f.num_addresses),
                       std::to_string(f.tx_count), join(native, ", "), f.usd});
        }
        out << t.str() << '\n';
    }

    if (!r.shared_transfers.empty()) {
        out << "Shared fund-transfer addresses\n";
        TextTable t({"fund transfer address", "scam addresses", "#scam", "#tx", "usd", "drained"});
        for (const auto& s : r.shared_transfers)
            t.add_row({s.address, join(s.scam_senders, ","),
                       std::to_string(s.scam_senders.size()), std::to_string(s.tx_count), s.usd,
                       s.fully_drained ? "yes" : "no"});
        out << t.str() << '\n';
    }

    if (!r.creation_histogram.empty()) {
        out << "Domain creation years\n";
        TextTable t({"year", "count"});
        for (const auto& [year, n] : r.creation_histogram) t.add_row({year, std::to_string(n)});
        out << t.str() << '\n';
    }

    if (!r.volume_vs_scams.empty()) {
        out << "Exchange volume vs scam domains\n";
        TextTable t({"exchange", "volume", "#mal urls"});
        for (const auto& v : r.volume_vs_scams)
            t.add_row({v.exchange, v.volume, std::to_string(v.mal_urls)});
        out << t.str() << '\n';
    }

    if (!r.totals.empty()) {
        out << "Totals\n";
        TextTable t({"metric", "value"});
        for (const auto& [k, v] : r.totals) t.add_row({k, std::to_string(v)});
        if (!r.total_received_usd.empty()) t.add_row({"total_received_usd", r.total_received_usd});
        out << t.str();
    }

    return out.str();
}

std::string emit_report(const Report& r, ReportFormat format) {
    if (format == ReportFormat::json) return report_to_json(r).dump(2) + "\n";
    return report_to_text(r);
}

} // namespace scamscope
