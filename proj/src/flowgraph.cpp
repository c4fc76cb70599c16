#include "scamscope/flowgraph.hpp"

#include "scamscope/errors.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace scamscope {

std::string_view role_tag(AddressRole r) {
    switch (r) {
        case AddressRole::scam: return "scam";
        case AddressRole::victim: return "victim";
        case AddressRole::fund_transfer: return "fund-transfer";
        case AddressRole::other: return "other";
    }
    throw std::invalid_argument("unknown role value");
}

RoleResult classify_roles(const std::vector<TransferRecord>& ledger,
                          const std::set<std::string>& scam_set, const FlowOptions& opts) {
    if (scam_set.empty()) throw InputError("scam address set is empty");

    std::set<std::string> active;
    std::map<std::string, std::set<std::string>> receivers_of; // sender -> receivers
    for (const TransferRecord& t : ledger) {
        active.insert(t.sender);
        active.insert(t.receiver);
        receivers_of[t.sender].insert(t.receiver);
    }

    RoleResult out;
    for (const std::string& s : scam_set)
        if (!active.count(s)) out.silent_scam.push_back(s);
    std::sort(out.silent_scam.begin(), out.silent_scam.end());

    for (const std::string& a : active)
        out.roles[a] = scam_set.count(a) ? AddressRole::scam : AddressRole::other;

    // taint spreads breadth-first from the scam set, bounded by max_hops
    std::deque<std::pair<std::string, int>> frontier;
    for (const std::string& s : scam_set)
        if (active.count(s)) frontier.emplace_back(s, 0);
    while (!frontier.empty()) {
        auto [addr, hops] = frontier.front();
        frontier.pop_front();
        if (hops >= opts.max_hops) continue;
        auto it = receivers_of.find(addr);
        if (it == receivers_of.end()) continue;
        for (const std::string& receiver : it->second) {
            AddressRole& role = out.roles[receiver];
            if (role == AddressRole::scam || role == AddressRole::fund_transfer) continue;
            role = AddressRole::fund_transfer;
            frontier.emplace_back(receiver, hops + 1);
        }
    }

    // victims: sent to a scam address, never received from one, not tainted
    std::set<std::string> scam_receivers_back; // addresses paid directly by a scam address
    for (const TransferRecord& t : ledger)
        if (scam_set.count(t.sender)) scam_receivers_back.insert(t.receiver);
    for (const TransferRecord& t : ledger) {
        if (!scam_set.count(t.receiver)) continue;
        AddressRole& role = out.roles[t.sender];
        if (role != AddressRole::other) continue;
        if (scam_receivers_back.count(t.sender)) continue;
        role = AddressRole::victim;
    }
    return out;
}

ReceivedTotal total_received(const std::vector<TransferRecord>& ledger,
                             const std::string& address) {
    ReceivedTotal out;
    for (const TransferRecord& t : ledger) {
        if (t.receiver != address) continue;
        out.native[t.chain] += t.amount;
        ++out.tx_count;
    }
    return out;
}

Decimal fiat_value(const std::map<Chain, Decimal>& native_totals, const PriceTable& prices) {
    Decimal total;
    for (const auto& [chain, amount] : native_totals) {
        auto it = prices.usd.find(chain);
        if (it == prices.usd.end())
            throw InputError("no price for chain: " + std::string(chain_tag(chain)));
        total += amount * it->second;
    }
    return total;
}

std::vector<SharedTransferRow> shared_transfer_report(const std::vector<TransferRecord>& ledger,
                                                      const std::set<std::string>& scam_set,
                                                      const PriceTable& prices,
                                                      const FlowOptions& opts) {
    RoleResult roles = classify_roles(ledger, scam_set, opts);

    std::vector<SharedTransferRow> rows;
    for (const auto& [address, role] : roles.roles) {
        if (role != AddressRole::fund_transfer) continue;
        std::set<std::string> scam_senders;
        size_t tx_count = 0;
        std::map<Chain, Decimal> incoming, outgoing;
        bool has_incoming = false;
        for (const TransferRecord& t : ledger) {
            if (t.receiver == address) {
                incoming[t.chain] += t.amount;
                has_incoming = true;
                if (scam_set.count(t.sender)) {
                    scam_senders.insert(t.sender);
                    ++tx_count;
                }
            }
            if (t.sender == address) outgoing[t.chain] += t.amount;
        }
        if (scam_senders.size() < 2) continue;
        SharedTransferRow row;
        row.address = address;
        row.scam_senders.assign(scam_senders.begin(), scam_senders.end());
        row.tx_count = tx_count;
        row.total_usd = fiat_value(incoming, prices);
        row.fully_drained = has_incoming && incoming == outgoing;
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const SharedTransferRow& a, const SharedTransferRow& b) {
        if (a.scam_senders.size() != b.scam_senders.size())
            return a.scam_senders.size() > b.scam_senders.size();
        if (a.total_usd != b.total_usd) return a.total_usd > b.total_usd;
        return a.address < b.address;
    });
    return rows;
}

std::vector<FamilyFlowRow> family_flow(const std::vector<Family>& families,
                                       const std::vector<TransferRecord>& ledger,
                                       const PriceTable& prices) {
    std::vector<FamilyFlowRow> rows;
    for (const Family& f : families) {
        FamilyFlowRow row;
        row.family = f.id;
        row.addresses = f.member_addresses.empty() ? f.shared_addresses : f.member_addresses;
        for (const std::string& address : row.addresses) {
            ReceivedTotal t = total_received(ledger, address);
            row.tx_count += t.tx_count;
            for (const auto& [chain, amount] : t.native) row.native[chain] += amount;
        }
        row.usd = fiat_value(row.native, prices);
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end(), [](const FamilyFlowRow& a, const FamilyFlowRow& b) {
        if (a.usd != b.usd) return a.usd > b.usd;
        return a.family < b.family;
    });
    return rows;
}

} // namespace scamscope
