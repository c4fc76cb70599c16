#include "scamscope/appcluster.hpp"

#include "scamscope/union_find.hpp"
#include "scamscope/url.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace scamscope {

namespace {

std::string lowercase(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

size_t intersection_size(const std::set<std::string>& a, const std::set<std::string>& b) {
    const std::set<std::string>& small = a.size() <= b.size() ? a : b;
    const std::set<std::string>& large = a.size() <= b.size() ? b : a;
    size_t n = 0;
    for (const std::string& x : small)
        if (large.count(x)) ++n;
    return n;
}

} // namespace

const OfficialAppEntry* OfficialAppIndex::match(const AppRecord& a) const {
    for (const OfficialAppEntry& e : entries) {
        if (!e.package_name.empty() && e.package_name == a.package_name) return &e;
        if (!e.app_name.empty() && e.app_name == a.app_name) return &e;
    }
    return nullptr;
}

bool detect_fake(const AppRecord& a, const OfficialAppIndex& index) {
    const OfficialAppEntry* entry = index.match(a);
    if (!entry) return false;
    return entry->certs.count(lowercase(a.cert_sha1)) == 0;
}

double method_similarity(const std::set<std::string>& a, const std::set<std::string>& b) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("method similarity is undefined for empty sets");
    return static_cast<double>(intersection_size(a, b)) /
           static_cast<double>(std::max(a.size(), b.size()));
}

AppClusters cluster_apps(const std::vector<AppRecord>& apps,
                         const std::set<std::string>& common_certs, double threshold) {
    if (!(threshold > 0.0 && threshold <= 1.0))
        throw std::invalid_argument("threshold must be in (0,1]");

    std::set<std::string> common;
    for (const std::string& c : common_certs) common.insert(lowercase(c));

    // duplicate sha256 records: first occurrence wins
    std::vector<size_t> kept;
    std::set<std::string> seen;
    for (size_t i = 0; i < apps.size(); ++i)
        if (seen.insert(apps[i].sha256).second) kept.push_back(i);

    UnionFind uf(kept.size());
    std::vector<bool> in_similarity_edge(kept.size(), false);

    // similarity edges
    for (size_t x = 0; x < kept.size(); ++x) {
        const auto& mx = apps[kept[x]].method_set;
        if (mx.empty()) continue;
        for (size_t y = x + 1; y < kept.size(); ++y) {
            const auto& my = apps[kept[y]].method_set;
            if (my.empty()) continue;
            // |n| <= min, so min/max bounds the reachable similarity
            double bound = static_cast<double>(std::min(mx.size(), my.size())) /
                           static_cast<double>(std::max(mx.size(), my.size()));
            if (bound <= threshold) continue;
            if (method_similarity(mx, my) > threshold) {
                uf.unite(x, y);
                in_similarity_edge[x] = in_similarity_edge[y] = true;
            }
        }
    }

    // shared-certificate edges, framework certificates excluded
    std::map<std::string, size_t> first_holder;
    for (size_t x = 0; x < kept.size(); ++x) {
        std::string cert = lowercase(apps[kept[x]].cert_sha1);
        if (cert.empty() || common.count(cert)) continue;
        auto [it, inserted] = first_holder.emplace(cert, x);
        if (!inserted) uf.unite(it->second, x);
    }

    std::map<size_t, std::vector<size_t>> components;
    for (size_t x = 0; x < kept.size(); ++x) components[uf.find(x)].push_back(x);

    AppClusters out;
    for (const auto& [root, member_idx] : components) {
        if (member_idx.size() < 2) {
            out.isolated.push_back(apps[kept[member_idx[0]]].sha256);
            continue;
        }
        AppFamily f;
        std::map<std::string, size_t> cert_count;
        for (size_t x : member_idx) {
            f.members.push_back(apps[kept[x]].sha256);
            if (in_similarity_edge[x]) f.similarity_core = true;
            std::string cert = lowercase(apps[kept[x]].cert_sha1);
            if (!cert.empty() && !common.count(cert)) ++cert_count[cert];
        }
        std::sort(f.members.begin(), f.members.end());
        for (const auto& [cert, n] : cert_count)
            if (n >= 2) f.shared_certs.insert(cert);
        out.families.push_back(std::move(f));
    }

    std::sort(out.families.begin(), out.families.end(), [](const AppFamily& a, const AppFamily& b) {
        if (a.members.size() != b.members.size()) return a.members.size() > b.members.size();
        return a.members.front() < b.members.front();
    });
    std::sort(out.isolated.begin(), out.isolated.end());
    return out;
}

LinkResult link_apps_to_domains(const std::vector<AppRecord>& apps,
                                const std::set<std::string>& scam_domains) {
    LinkResult out;
    for (const AppRecord& a : apps) {
        for (const std::string& link : a.embedded_urls) {
            std::optional<Url> url = parse_url(link);
            if (!url) {
                out.warnings.push_back(a.sha256 + ": unparseable url: " + link);
                continue;
            }
            for (const std::string& domain : scam_domains) {
                if (host_matches_domain(url->host, domain)) {
                    out.links.push_back(AppDomainLink{a.sha256, link, domain});
                    break;
                }
            }
        }
    }
    std::sort(out.links.begin(), out.links.end(), [](const AppDomainLink& a, const AppDomainLink& b) {
        return std::tie(a.sha256, a.url, a.domain) < std::tie(b.sha256, b.url, b.domain);
    });
    std::sort(out.warnings.begin(), out.warnings.end());
    return out;
}

} // namespace scamscope
