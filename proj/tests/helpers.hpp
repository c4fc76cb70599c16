#pragma once

#include "scamscope/appcluster.hpp"
#include "scamscope/domcluster.hpp"
#include "scamscope/flowgraph.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testutil {

using namespace scamscope;

// Canonical partition form: sorted list of sorted groups, singletons
// included, so two clusterings compare structurally.
using Partition = std::vector<std::vector<std::string>>;

inline Partition canonical_partition(const std::vector<std::vector<std::string>>& groups) {
    Partition p = groups;
    for (auto& g : p) std::sort(g.begin(), g.end());
    std::sort(p.begin(), p.end());
    return p;
}

inline Partition partition_of(const DomainClusters& c) {
    std::vector<std::vector<std::string>> groups;
    for (const Family& f : c.families) groups.push_back(f.members);
    for (const std::string& d : c.isolated) groups.push_back({d});
    return canonical_partition(groups);
}

inline Partition partition_of(const AppClusters& c) {
    std::vector<std::vector<std::string>> groups;
    for (const AppFamily& f : c.families) groups.push_back(f.members);
    for (const std::string& s : c.isolated) groups.push_back({s});
    return canonical_partition(groups);
}

// Brute-force transitive closure over an explicit pairwise edge predicate;
// deliberately avoids union-find so it checks the implementation from a
// different direction.
template <typename Item, typename EdgeFn>
Partition brute_force_components(const std::vector<Item>& items,
                                 const std::vector<std::string>& names, EdgeFn&& edge) {
    const size_t n = items.size();
    std::vector<std::vector<size_t>> adj(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (edge(items[i], items[j])) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    std::vector<bool> seen(n, false);
    std::vector<std::vector<std::string>> groups;
    for (size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<size_t> stack = {i};
        seen[i] = true;
        std::vector<std::string> group;
        while (!stack.empty()) {
            size_t x = stack.back();
            stack.pop_back();
            group.push_back(names[x]);
            for (size_t y : adj[x])
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
        }
        groups.push_back(std::move(group));
    }
    return canonical_partition(groups);
}

// ---- randomized domain fixtures ----

struct DomainFixture {
    std::vector<DomainRecord> records;
    Denylists deny;
};

inline DomainFixture random_domain_fixture(std::mt19937& rng, size_t max_domains = 50) {
    DomainFixture fx;
    std::uniform_int_distribution<size_t> n_dist(2, max_domains);
    size_t n = n_dist(rng);

    std::vector<std::string> ip_pool;
    for (int i = 0; i < 20; ++i) ip_pool.push_back("10.0." + std::to_string(i) + ".1");
    std::vector<std::string> registrant_pool = {"alice",   "bob",      "carol", "dave",
                                                "erin",    "GDPR Masked", "",     "  "};
    std::vector<std::string> address_pool;
    for (int i = 0; i < 10; ++i) address_pool.push_back("addr" + std::to_string(i));

    fx.deny.parking_ips = {"10.0.0.0/28", "10.0.7.1"};
    fx.deny.masked_registrant_markers = {"gdpr masked"};

    std::uniform_int_distribution<int> coin(0, 4);
    std::uniform_int_distribution<size_t> ip_pick(0, ip_pool.size() - 1);
    std::uniform_int_distribution<size_t> reg_pick(0, registrant_pool.size() - 1);
    std::uniform_int_distribution<size_t> addr_pick(0, address_pool.size() - 1);
    for (size_t i = 0; i < n; ++i) {
        DomainRecord r;
        r.domain = "d" + std::to_string(i) + ".example";
        int n_ips = coin(rng) % 3;
        for (int k = 0; k < n_ips; ++k) r.ip_history.insert(ip_pool[ip_pick(rng)]);
        if (coin(rng) == 0) r.registrant = registrant_pool[reg_pick(rng)];
        int n_addr = coin(rng) == 1 ? 1 : (coin(rng) == 2 ? 2 : 0);
        for (int k = 0; k < n_addr; ++k) r.addresses.insert(address_pool[addr_pick(rng)]);
        fx.records.push_back(std::move(r));
    }
    return fx;
}

// the edge relation the brute-force oracle uses for domains
inline bool domain_edge(const DomainRecord& a, const DomainRecord& b, const Denylists& deny) {
    auto denied = [&](const std::string& ip) {
        for (const std::string& entry : deny.parking_ips)
            if (ip_in_cidr(ip, entry)) return true;
        return false;
    };
    for (const std::string& ip : a.ip_history)
        if (!denied(ip) && b.ip_history.count(ip)) return true;
    if (a.registrant && b.registrant &&
        registrant_valid(*a.registrant, deny.masked_registrant_markers) &&
        registrant_valid(*b.registrant, deny.masked_registrant_markers) &&
        *a.registrant == *b.registrant)
        return true;
    for (const std::string& addr : a.addresses)
        if (b.addresses.count(addr)) return true;
    return false;
}

// ---- randomized app fixtures ----

struct AppFixture {
    std::vector<AppRecord> apps;
    std::set<std::string> common_certs;
    double threshold = 0.8;
};

inline AppFixture random_app_fixture(std::mt19937& rng, size_t max_apps = 30) {
    AppFixture fx;
    std::uniform_int_distribution<size_t> n_dist(2, max_apps);
    size_t n = n_dist(rng);
    std::vector<std::string> cert_pool;
    for (int i = 0; i < 8; ++i)
        cert_pool.push_back(std::string(39, 'a' + i) + std::to_string(i));
    fx.common_certs = {cert_pool[0]};
    std::vector<std::string> method_pool;
    for (int i = 0; i < 12; ++i) method_pool.push_back("m" + std::to_string(i));

    std::uniform_int_distribution<size_t> cert_pick(0, cert_pool.size() - 1);
    std::uniform_int_distribution<int> m_count(0, 8);
    std::uniform_int_distribution<size_t> m_pick(0, method_pool.size() - 1);
    for (size_t i = 0; i < n; ++i) {
        AppRecord a;
        std::string hex = std::to_string(i);
        a.sha256 = std::string(64 - hex.size(), '0') + hex;
        a.cert_sha1 = cert_pool[cert_pick(rng)];
        int methods = m_count(rng);
        for (int k = 0; k < methods; ++k) a.method_set.insert(method_pool[m_pick(rng)]);
        fx.apps.push_back(std::move(a));
    }
    return fx;
}

inline bool app_edge(const AppRecord& a, const AppRecord& b,
                     const std::set<std::string>& common_certs, double threshold) {
    if (!a.cert_sha1.empty() && a.cert_sha1 == b.cert_sha1 && !common_certs.count(a.cert_sha1))
        return true;
    if (!a.method_set.empty() && !b.method_set.empty() &&
        method_similarity(a.method_set, b.method_set) > threshold)
        return true;
    return false;
}

// ---- randomized ledgers ----

inline std::vector<TransferRecord> random_ledger(std::mt19937& rng, size_t max_transfers,
                                                 std::set<std::string>& scam_out) {
    std::vector<std::string> pool;
    for (int i = 0; i < 12; ++i) pool.push_back("x" + std::to_string(i));
    scam_out = {pool[0], pool[1]};
    std::uniform_int_distribution<size_t> n_dist(1, max_transfers);
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> amount(1, 500);
    std::vector<TransferRecord> ledger;
    size_t n = n_dist(rng);
    for (size_t i = 0; i < n; ++i) {
        TransferRecord t;
        t.chain = Chain::bitcoin;
        t.tx_id = "t" + std::to_string(i);
        t.sender = pool[pick(rng)];
        t.receiver = pool[pick(rng)];
        t.amount = Decimal::parse(std::to_string(amount(rng)) + ".00000001");
        t.timestamp = static_cast<int64_t>(1500000000 + i);
        ledger.push_back(std::move(t));
    }
    return ledger;
}

// hop-bounded reachability by repeated relaxation, independent of the BFS
inline std::set<std::string> taint_oracle(const std::vector<TransferRecord>& ledger,
                                          const std::set<std::string>& scam_set, int max_hops) {
    std::map<std::string, int> dist; // fewest hops from any scam address
    for (const std::string& s : scam_set) dist[s] = 0;
    for (int round = 0; round < max_hops; ++round) {
        bool changed = false;
        for (const TransferRecord& t : ledger) {
            auto it = dist.find(t.sender);
            if (it == dist.end() || it->second >= max_hops) continue;
            int nd = it->second + 1;
            auto [rit, inserted] = dist.emplace(t.receiver, nd);
            if (!inserted && rit->second > nd) {
                rit->second = nd;
                changed = true;
            } else if (inserted) {
                changed = true;
            }
        }
        if (!changed) break;
    }
    std::set<std::string> tainted;
    for (const auto& [addr, d] : dist)
        if (d >= 1 && !scam_set.count(addr)) tainted.insert(addr);
    return tainted;
}

} // namespace testutil
