#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace scamscope {

// A target domain split into the registrable label and the public suffix.
// Transformations apply to the label only, never the suffix.
struct TargetDomain {
    std::string label; // lowercase ascii, [a-z0-9-], no edge hyphen
    std::string tld;   // may itself contain dots ("co.uk")

    // "binance.com" -> {binance, com}; "coinfloor.co.uk" -> {coinfloor, co.uk}.
    // Throws std::invalid_argument on anything that is not a valid lowercase
    // ascii domain with at least two labels.
    static TargetDomain parse(const std::string& domain);

    std::string fqdn() const { return label + "." + tld; }
};

enum class TransformModel {
    addition,
    bitsquatting,
    homoglyph,
    hyphenation,
    insertion,
    omission,
    repetition,
    replacement,
    subdomain,
    transposition,
    vowel_swap,
    various,
    dictionary,
};

inline constexpr int kTransformModelCount = 13;

const std::vector<TransformModel>& all_transform_models();
std::string_view model_tag(TransformModel m);              // "vowel-swap", ...
TransformModel model_from_tag(std::string_view tag);       // throws std::invalid_argument

struct GeneratorConfig {
    // affix words for the dictionary model
    std::vector<std::string> dictionary;
    // per-character confusable substitutes, each a single code point (utf-8)
    std::map<char, std::vector<std::string>> homoglyphs;
    // keyboard adjacency for replacement/insertion
    std::map<char, std::string> keyboard;
    std::set<TransformModel> enabled_models;

    static GeneratorConfig defaults();
};

struct Candidate {
    TransformModel model;
    std::string unicode_form; // full domain, utf-8
    std::string ascii_form;   // punycode-encoded full domain
    TargetDomain target;
};

// Label-local variants for one model. Deterministic, deduplicated, never
// contains the input label. Labels too short for a model yield an empty
// set. Unknown model values throw std::invalid_argument.
std::set<std::string> apply_model(TransformModel model, const std::string& label,
                                  const GeneratorConfig& config);

// Full candidate list for a target: every enabled model, TLD composition
// (subdomain dots, various TLD fusion, dictionary affixes), punycode
// encoding, DNS validity filtering, sorted by (ascii_form, model).
std::vector<Candidate> generate_candidates(const TargetDomain& target,
                                           const GeneratorConfig& config);

// DNS syntax checks on ascii forms.
bool valid_dns_label(const std::string& label);
bool valid_dns_domain(const std::string& domain);

} // namespace scamscope
