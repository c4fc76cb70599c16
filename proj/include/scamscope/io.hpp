#pragma once

#include "scamscope/appcluster.hpp"
#include "scamscope/domcluster.hpp"
#include "scamscope/errors.hpp"
#include "scamscope/flowgraph.hpp"
#include "scamscope/labeler.hpp"
#include "scamscope/squatgen.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace scamscope {

enum class Schema { pages, evidence, profiles, records, apps, official_apps, ledger, prices };

Schema schema_from_id(const std::string& id); // throws InputError on unknown ids

struct PageText {
    std::string domain;
    std::string text;

    bool operator==(const PageText&) const = default;
};

// JSONL loaders; errors carry "<path>:<line>: <field problem>".
std::vector<PageText> load_pages(const std::string& path);
std::vector<DomainEvidence> load_evidence(const std::string& path);
std::vector<DomainRecord> load_domain_records(const std::string& path);
std::vector<AppRecord> load_apps(const std::string& path);
std::vector<TransferRecord> load_ledger(const std::string& path);

// JSON documents
std::vector<OfficialProfile> load_profiles(const std::string& path);
OfficialAppIndex load_official_apps(const std::string& path);
PriceTable load_prices(const std::string& path);

// plain line files; blank lines and '#' comments skipped
std::vector<std::string> load_lines(const std::string& path);

// canonical writers (sorted keys, decimals as strings)
void save_pages(const std::string& path, const std::vector<PageText>& v);
void save_evidence(const std::string& path, const std::vector<DomainEvidence>& v);
void save_domain_records(const std::string& path, const std::vector<DomainRecord>& v);
void save_apps(const std::string& path, const std::vector<AppRecord>& v);
void save_ledger(const std::string& path, const std::vector<TransferRecord>& v);

void save_candidates(const std::string& path, const std::vector<Candidate>& v);
void save_observations(const std::string& path, const std::vector<AddressObservation>& v);

nlohmann::json evidence_to_json(const DomainEvidence& e);
nlohmann::json record_to_json(const DomainRecord& r);
nlohmann::json app_to_json(const AppRecord& a);
nlohmann::json transfer_to_json(const TransferRecord& t);

std::string read_file(const std::string& path);  // throws InputError
void write_file(const std::string& path, const std::string& content);

// full-record equality, used by round-trip tests
bool operator==(const DomainEvidence& a, const DomainEvidence& b);
bool operator==(const DomainRecord& a, const DomainRecord& b);
bool operator==(const AppRecord& a, const AppRecord& b);
bool operator==(const TransferRecord& a, const TransferRecord& b);

} // namespace scamscope
