#pragma once

#include "scamscope/addrex.hpp"
#include "scamscope/decimal.hpp"
#include "scamscope/domcluster.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace scamscope {

struct TransferRecord {
    Chain chain = Chain::bitcoin;
    std::string tx_id;
    std::string sender;
    std::string receiver;
    Decimal amount; // native units, non-negative
    int64_t timestamp = 0;
    bool is_change = false; // UTXO change output, flagged by ingestion
};

enum class AddressRole { scam, victim, fund_transfer, other };

std::string_view role_tag(AddressRole r);

struct FlowOptions {
    // Taint travels from scam addresses along transfers for at most this
    // many hops; unbounded tracing over-taints a real ledger.
    int max_hops = 3;
};

struct RoleResult {
    std::map<std::string, AddressRole> roles; // every address with >= 1 transaction
    std::vector<std::string> silent_scam;     // scam addresses without transactions, sorted
};

// scam: member of scam_set with >= 1 transaction. fund-transfer: receiver
// (within max_hops) of funds originating at a scam address. victim: sent
// to a scam address, received nothing back from the scam side.
RoleResult classify_roles(const std::vector<TransferRecord>& ledger,
                          const std::set<std::string>& scam_set, const FlowOptions& options = {});

struct ReceivedTotal {
    std::map<Chain, Decimal> native;
    size_t tx_count = 0;

    bool operator==(const ReceivedTotal&) const = default;
};

ReceivedTotal total_received(const std::vector<TransferRecord>& ledger,
                             const std::string& address);

struct PriceTable {
    std::map<Chain, Decimal> usd; // price per native unit, > 0
    std::string as_of;
};

// Sum of amount * price over chains, exact decimal arithmetic. Throws
// InputError naming the chain when a price is missing.
Decimal fiat_value(const std::map<Chain, Decimal>& native_totals, const PriceTable& prices);

struct SharedTransferRow {
    std::string address;                   // the fund-transfer address
    std::vector<std::string> scam_senders; // distinct scam addresses paying it, sorted
    size_t tx_count = 0;                   // transfers from those scam addresses
    Decimal total_usd;                     // all incoming, valued
    bool fully_drained = false;            // outgoing total equals incoming total
};

// Fund-transfer addresses receiving from >= 2 distinct scam addresses,
// ordered by scam count desc, then USD desc, then address.
std::vector<SharedTransferRow> shared_transfer_report(const std::vector<TransferRecord>& ledger,
                                                      const std::set<std::string>& scam_set,
                                                      const PriceTable& prices,
                                                      const FlowOptions& options = {});

struct FamilyFlowRow {
    std::string family;
    std::set<std::string> addresses;
    size_t tx_count = 0;
    std::map<Chain, Decimal> native;
    Decimal usd;
};

// Per-family receipts: sum of total_received over the family's addresses.
std::vector<FamilyFlowRow> family_flow(const std::vector<Family>& families,
                                       const std::vector<TransferRecord>& ledger,
                                       const PriceTable& prices);

} // namespace scamscope
