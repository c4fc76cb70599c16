#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "scamscope/domcluster.hpp"
#include "scamscope/errors.hpp"

#include <algorithm>
#include <random>

using namespace scamscope;
using namespace testutil;

namespace {

DomainRecord record(const std::string& domain, std::set<std::string> ips = {},
                    std::optional<std::string> registrant = std::nullopt,
                    std::set<std::string> addresses = {}) {
    DomainRecord r;
    r.domain = domain;
    r.ip_history = std::move(ips);
    r.registrant = std::move(registrant);
    r.addresses = std::move(addresses);
    return r;
}

} // namespace

TEST_CASE("three-phase evidence chain merges into one family") {
    std::vector<DomainRecord> records = {
        record("d1.com", {"1.2.3.4"}),
        record("d2.com", {"1.2.3.4"}, "xu shuaiwei"),
        record("d3.com", {}, "xu shuaiwei", {"addrA"}),
        record("d4.com", {}, std::nullopt, {"addrA"}),
    };
    DomainClusters c = cluster_domains(records, {});
    REQUIRE(c.families.size() == 1);
    CHECK(c.families[0].members ==
          std::vector<std::string>{"d1.com", "d2.com", "d3.com", "d4.com"});
    CHECK(c.families[0].id == "d1.com");
    CHECK(c.families[0].shared_ips == std::set<std::string>{"1.2.3.4"});
    CHECK(c.families[0].shared_registrants == std::set<std::string>{"xu shuaiwei"});
    CHECK(c.families[0].shared_addresses == std::set<std::string>{"addrA"});
    CHECK(c.isolated.empty());
}

TEST_CASE("pairwise-disjoint evidence leaves everything isolated") {
    std::vector<DomainRecord> records = {
        record("a.com", {"1.1.1.1"}),
        record("b.com", {"2.2.2.2"}, "alice"),
        record("c.com", {}, "bob", {"x"}),
    };
    DomainClusters c = cluster_domains(records, {});
    CHECK(c.families.empty());
    CHECK(c.isolated == std::vector<std::string>{"a.com", "b.com", "c.com"});
}

TEST_CASE("parking CIDR denylist blocks an ip merge") {
    std::vector<DomainRecord> records = {
        record("a.com", {"136.243.255.7"}),
        record("b.com", {"136.243.255.7"}),
    };
    Denylists deny;
    deny.parking_ips = {"136.243.255.0/24"};
    DomainClusters c = cluster_domains(records, deny);
    CHECK(c.families.empty());
    CHECK(c.isolated.size() == 2);
    // without the denylist they merge
    CHECK(cluster_domains(records, {}).families.size() == 1);
}

TEST_CASE("masked registrants never form edges") {
    std::vector<DomainRecord> records = {
        record("a.com", {}, "GDPR Masked"),
        record("b.com", {}, "GDPR Masked"),
        record("c.com", {}, "  "),
        record("d.com", {}, "  "),
    };
    Denylists deny;
    deny.masked_registrant_markers = {"gdpr masked"};
    DomainClusters c = cluster_domains(records, deny);
    CHECK(c.families.empty());
    CHECK(c.isolated.size() == 4);
}

TEST_CASE("duplicate domain raises an error naming it") {
    std::vector<DomainRecord> records = {record("dup.com"), record("dup.com")};
    CHECK_THROWS_WITH_AS(cluster_domains(records, {}), doctest::Contains("dup.com"), InputError);
}

TEST_CASE("ip_in_cidr") {
    CHECK(ip_in_cidr("136.243.255.7", "136.243.255.0/24"));
    CHECK_FALSE(ip_in_cidr("136.243.254.7", "136.243.255.0/24"));
    CHECK(ip_in_cidr("10.1.2.3", "10.1.2.3"));
    CHECK_FALSE(ip_in_cidr("10.1.2.4", "10.1.2.3"));
    CHECK(ip_in_cidr("204.93.167.3", "204.93.160.0/19"));
    CHECK_FALSE(ip_in_cidr("204.93.192.1", "204.93.160.0/19"));
    CHECK(ip_in_cidr("2001:db8::1", "2001:db8::/32"));
    CHECK_FALSE(ip_in_cidr("2001:db9::1", "2001:db8::/32"));
    CHECK_FALSE(ip_in_cidr("1.2.3.4", "2001:db8::/32")); // family mismatch
    CHECK_FALSE(ip_in_cidr("not-an-ip", "10.0.0.0/8"));
}

TEST_CASE("registrant validity") {
    std::vector<std::string> markers = {"GDPR Masked", "REDACTED"};
    CHECK(registrant_valid("xu shuaiwei", markers));
    CHECK_FALSE(registrant_valid("", markers));
    CHECK_FALSE(registrant_valid("   ", markers));
    CHECK_FALSE(registrant_valid("gdpr masked", markers));
    CHECK_FALSE(registrant_valid("Data REDACTED for privacy", markers));
}

TEST_CASE("family_report row for a shared-address family") {
    std::vector<DomainRecord> records = {
        record("dropbinance.com", {}, std::nullopt, {"1CdWQJMiQF1uYbwKc7fb5VBb9JBrhykcNf"}),
        record("giftbinance.com", {}, std::nullopt, {"1CdWQJMiQF1uYbwKc7fb5VBb9JBrhykcNf"}),
    };
    records[0].category = Category::c4_trading_scam;
    records[1].category = Category::c4_trading_scam;
    records[0].target_exchange = "Binance";
    records[1].target_exchange = "Binance";
    DomainClusters c = cluster_domains(records, {});
    REQUIRE(c.families.size() == 1);
    FamilyReportRow row = family_report(c.families[0]);
    CHECK(row.family == "dropbinance.com");
    CHECK(row.num_urls == 2);
    CHECK(row.num_exchanges == 1);
    CHECK(row.shared_addresses ==
          std::set<std::string>{"1CdWQJMiQF1uYbwKc7fb5VBb9JBrhykcNf"});
    CHECK(row.category == Category::c4_trading_scam);
}

TEST_CASE("family_report rejects singletons") {
    Family f;
    f.id = "alone.com";
    f.members = {"alone.com"};
    CHECK_THROWS_AS(family_report(f), std::logic_error);
}

TEST_CASE("dominant category: modal with severity tie-break") {
    CHECK(dominant_category({Category::c3_phishing, Category::c4_trading_scam}) ==
          Category::c4_trading_scam);
    CHECK(dominant_category({Category::c5_referral_fraud, Category::c5_referral_fraud,
                             Category::c4_trading_scam}) == Category::c5_referral_fraud);
    CHECK(dominant_category({Category::c2_parked, Category::c6_adult_gambling}) ==
          Category::c6_adult_gambling);
}

TEST_CASE("oracle equivalence on randomized fixtures") {
    std::mt19937 rng(2024);
    for (int iter = 0; iter < 60; ++iter) {
        DomainFixture fx = random_domain_fixture(rng);
        DomainClusters c = cluster_domains(fx.records, fx.deny);
        std::vector<std::string> names;
        for (const auto& r : fx.records) names.push_back(r.domain);
        Partition expected = brute_force_components(
            fx.records, names,
            [&](const DomainRecord& a, const DomainRecord& b) { return domain_edge(a, b, fx.deny); });
        CHECK(partition_of(c) == expected);
    }
}

TEST_CASE("order invariance") {
    std::mt19937 rng(5);
    DomainFixture fx = random_domain_fixture(rng, 30);
    DomainClusters baseline = cluster_domains(fx.records, fx.deny);
    for (int iter = 0; iter < 20; ++iter) {
        std::shuffle(fx.records.begin(), fx.records.end(), rng);
        DomainClusters shuffled = cluster_domains(fx.records, fx.deny);
        CHECK(partition_of(shuffled) == partition_of(baseline));
        CHECK(shuffled.isolated == baseline.isolated);
        REQUIRE(shuffled.families.size() == baseline.families.size());
        for (size_t i = 0; i < shuffled.families.size(); ++i)
            CHECK(shuffled.families[i].members == baseline.families[i].members);
    }
}

TEST_CASE("denylist monotonicity: adding an ip never grows a family") {
    std::mt19937 rng(77);
    for (int iter = 0; iter < 30; ++iter) {
        DomainFixture fx = random_domain_fixture(rng, 25);
        DomainClusters before = cluster_domains(fx.records, fx.deny);
        Denylists harder = fx.deny;
        harder.parking_ips.push_back("10.0.3.1");
        DomainClusters after = cluster_domains(fx.records, harder);
        size_t before_max = before.families.empty() ? 0 : before.families[0].members.size();
        size_t after_max = after.families.empty() ? 0 : after.families[0].members.size();
        CHECK(after_max <= before_max);
    }
}

TEST_CASE("every domain lands in exactly one family or isolated") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 30; ++iter) {
        DomainFixture fx = random_domain_fixture(rng);
        DomainClusters c = cluster_domains(fx.records, fx.deny);
        std::multiset<std::string> seen;
        for (const Family& f : c.families) {
            CHECK(f.members.size() >= 2);
            for (const std::string& m : f.members) seen.insert(m);
        }
        for (const std::string& d : c.isolated) seen.insert(d);
        std::multiset<std::string> expected;
        for (const auto& r : fx.records) expected.insert(r.domain);
        CHECK(seen == expected);
    }
}

TEST_CASE("auto deny drops over-shared ips") {
    std::vector<DomainRecord> records;
    for (int i = 0; i < 6; ++i)
        records.push_back(record("h" + std::to_string(i) + ".com", {"9.9.9.9"}));
    ClusterOptions opts;
    opts.auto_deny_common_ips = true;
    opts.auto_deny_threshold = 5;
    DomainClusters c = cluster_domains(records, {}, opts);
    CHECK(c.families.empty());
    CHECK(c.isolated.size() == 6);
    opts.auto_deny_threshold = 6;
    CHECK(cluster_domains(records, {}, opts).families.size() == 1);
}
