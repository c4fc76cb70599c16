#include "scamscope/squatgen.hpp"

#include "scamscope/punycode.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace scamscope {

namespace {

bool ascii_label_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
}

constexpr std::array<std::pair<TransformModel, std::string_view>, kTransformModelCount> kTags = {{
    {TransformModel::addition, "addition"},
    {TransformModel::bitsquatting, "bitsquatting"},
    {TransformModel::homoglyph, "homoglyph"},
    {TransformModel::hyphenation, "hyphenation"},
    {TransformModel::insertion, "insertion"},
    {TransformModel::omission, "omission"},
    {TransformModel::repetition, "repetition"},
    {TransformModel::replacement, "replacement"},
    {TransformModel::subdomain, "subdomain"},
    {TransformModel::transposition, "transposition"},
    {TransformModel::vowel_swap, "vowel-swap"},
    {TransformModel::various, "various"},
    {TransformModel::dictionary, "dictionary"},
}};

} // namespace

const std::vector<TransformModel>& all_transform_models() {
    static const std::vector<TransformModel> models = [] {
        std::vector<TransformModel> v;
        for (const auto& [m, tag] : kTags) v.push_back(m);
        return v;
    }();
    return models;
}

std::string_view model_tag(TransformModel m) {
    for (const auto& [model, tag] : kTags)
        if (model == m) return tag;
    throw std::invalid_argument("unknown transform model value");
}

TransformModel model_from_tag(std::string_view tag) {
    for (const auto& [model, t] : kTags)
        if (t == tag) return model;
    throw std::invalid_argument("unknown transform model tag: " + std::string(tag));
}

bool valid_dns_label(const std::string& label) {
    if (label.empty() || label.size() > 63) return false;
    if (label.front() == '-' || label.back() == '-') return false;
    return std::all_of(label.begin(), label.end(), ascii_label_char);
}

bool valid_dns_domain(const std::string& domain) {
    if (domain.empty() || domain.size() > 253) return false;
    size_t start = 0;
    while (true) {
        size_t dot = domain.find('.', start);
        std::string label =
            domain.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (!valid_dns_label(label)) return false;
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    return true;
}

TargetDomain TargetDomain::parse(const std::string& domain) {
    size_t dot = domain.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 >= domain.size())
        throw std::invalid_argument("domain must have a label and a tld: " + domain);
    TargetDomain t{domain.substr(0, dot), domain.substr(dot + 1)};
    if (!valid_dns_label(t.label))
        throw std::invalid_argument("invalid registrable label: " + t.label);
    if (!valid_dns_domain(t.tld))
        throw std::invalid_argument("invalid tld: " + t.tld);
    return t;
}

GeneratorConfig GeneratorConfig::defaults() {
    GeneratorConfig cfg;
    cfg.dictionary = {"my",  "pay",    "login",  "app", "support", "secure",
                      "wallet", "promo", "gift", "win", "verify"};
    cfg.keyboard = {
        {'1', "2q"},     {'2', "3wq1"},   {'3', "4ew2"},   {'4', "5re3"},  {'5', "6tr4"},
        {'6', "7yt5"},   {'7', "8uy6"},   {'8', "9iu7"},   {'9', "0oi8"},  {'0', "po9"},
        {'q', "12wa"},   {'w', "3esaq2"}, {'e', "4rdsw3"}, {'r', "5tfde4"},{'t', "6ygfr5"},
        {'y', "7uhgt6"}, {'u', "8ijhy7"}, {'i', "9okju8"}, {'o', "0plki9"},{'p', "lo0"},
        {'a', "qwsz"},   {'s', "edxzaw"}, {'d', "rfcxse"}, {'f', "tgvcdr"},{'g', "yhbvft"},
        {'h', "ujnbgy"}, {'j', "ikmnhu"}, {'k', "olmji"},  {'l', "kop"},
        {'z', "asx"},    {'x', "zsdc"},   {'c', "xdfv"},   {'v', "cfgb"},  {'b', "vghn"},
        {'n', "bhjm"},   {'m', "njk"},
    };
    cfg.homoglyphs = {
        {'a', {"à", "á", "â", "ã", "ä", "å", "ɑ", "а", "ạ", "ǎ", "ă", "ȧ", "ą", "α"}},
        {'b', {"d", "ʙ", "ɓ", "ḃ", "ḅ", "ḇ", "ƅ", "ь"}},
        {'c', {"e", "с", "ƈ", "ċ", "ć", "ç", "č", "ĉ"}},
        {'d', {"b", "ɗ", "đ", "ď", "ḑ", "ḋ", "ḍ", "ḏ", "ḓ"}},
        {'e', {"c", "е", "é", "è", "ê", "ë", "ē", "ĕ", "ě", "ė", "ẹ", "ę", "ȩ", "ɇ"}},
        {'f', {"ƒ", "ḟ", "ſ"}},
        {'g', {"q", "ɢ", "ɡ", "ġ", "ğ", "ǵ", "ģ", "ĝ", "ǧ", "ǥ"}},
        {'h', {"ʜ", "ħ", "ḣ", "ḥ", "ḫ", "ȟ", "һ"}},
        {'i', {"1", "l", "í", "ì", "ï", "ı", "ɩ", "ǐ", "ĭ", "ỉ", "ị", "ɨ", "ī", "і"}},
        {'j', {"ʝ", "ǰ", "ĵ", "ɉ", "ј"}},
        {'k', {"ḳ", "ḵ", "ķ", "ƙ", "κ"}},
        {'l', {"1", "i", "ʟ", "ł", "ĺ", "ļ", "ḷ", "ḻ", "ľ"}},
        {'m', {"n", "ṁ", "ṃ", "ɱ", "м"}},
        {'n', {"m", "r", "ń", "ṅ", "ṇ", "ṉ", "ñ", "ņ", "ǹ", "ň", "ŋ", "п"}},
        {'o', {"0", "ȯ", "ọ", "ỏ", "ơ", "ó", "ò", "ô", "õ", "ö", "ō", "ŏ", "ǒ", "ø", "о"}},
        {'p', {"ƿ", "ṗ", "ṕ", "р"}},
        {'q', {"g", "ʠ"}},
        {'r', {"ʀ", "ɼ", "ṛ", "ṟ", "ŕ", "ř", "ŗ", "г"}},
        {'s', {"ʂ", "ś", "ṣ", "ṡ", "ş", "š", "ș", "ѕ"}},
        {'t', {"ţ", "ṭ", "ț", "ŧ", "ť", "т"}},
        {'u', {"ᴜ", "ú", "ù", "û", "ü", "ū", "ŭ", "ů", "ų", "ư", "ǔ", "ụ"}},
        {'v', {"ṿ", "ⱱ", "ṽ", "ѵ", "ν"}},
        {'w', {"ŵ", "ẁ", "ẃ", "ẅ", "ѡ", "ԝ"}},
        {'x', {"ẋ", "ẍ", "х"}},
        {'y', {"ý", "ỳ", "ŷ", "ÿ", "ȳ", "ẏ", "у", "ʏ"}},
        {'z', {"ʐ", "ż", "ź", "ž", "ẓ", "ẕ", "ƶ"}},
        {'0', {"o"}},
        {'1', {"l", "i"}},
    };
    for (TransformModel m : all_transform_models()) cfg.enabled_models.insert(m);
    return cfg;
}

namespace {

// label-structure check that tolerates non-ascii code points (homoglyph
// output); punycode-encoded forms get the strict ascii check later
bool plausible_label_structure(const std::string& s) {
    if (s.empty() || s.front() == '-' || s.front() == '.' || s.back() == '-' || s.back() == '.')
        return false;
    return s.find("..") == std::string::npos;
}

void add(std::set<std::string>& out, const std::string& input, std::string candidate) {
    if (candidate != input && plausible_label_structure(candidate))
        out.insert(std::move(candidate));
}

std::set<std::string> gen_addition(const std::string& label) {
    std::set<std::string> out;
    for (char c = 'a'; c <= 'z'; ++c) add(out, label, label + c);
    for (char c = '0'; c <= '9'; ++c) add(out, label, label + c);
    return out;
}

std::set<std::string> gen_omission(const std::string& label) {
    std::set<std::string> out;
    for (size_t i = 0; i < label.size(); ++i)
        add(out, label, label.substr(0, i) + label.substr(i + 1));
    return out;
}

std::set<std::string> gen_repetition(const std::string& label) {
    std::set<std::string> out;
    for (size_t i = 0; i < label.size(); ++i)
        if (std::isalpha(static_cast<unsigned char>(label[i])))
            add(out, label, label.substr(0, i + 1) + label[i] + label.substr(i + 1));
    return out;
}

std::set<std::string> gen_transposition(const std::string& label) {
    std::set<std::string> out;
    for (size_t i = 0; i + 1 < label.size(); ++i) {
        if (label[i] == label[i + 1]) continue;
        std::string s = label;
        std::swap(s[i], s[i + 1]);
        add(out, label, s);
    }
    return out;
}

std::set<std::string> gen_replacement(const std::string& label, const GeneratorConfig& cfg) {
    std::set<std::string> out;
    for (size_t i = 0; i < label.size(); ++i) {
        auto it = cfg.keyboard.find(label[i]);
        if (it == cfg.keyboard.end()) continue;
        for (char adj : it->second) {
            std::string s = label;
            s[i] = adj;
            add(out, label, s);
        }
    }
    return out;
}

std::set<std::string> gen_insertion(const std::string& label, const GeneratorConfig& cfg) {
    std::set<std::string> out;
    if (label.size() < 2) return out;
    for (size_t i = 1; i + 1 < label.size(); ++i) {
        auto it = cfg.keyboard.find(label[i]);
        if (it == cfg.keyboard.end()) continue;
        for (char adj : it->second) {
            add(out, label, label.substr(0, i) + adj + label.substr(i));
            add(out, label, label.substr(0, i + 1) + adj + label.substr(i + 1));
        }
    }
    return out;
}

std::set<std::string> gen_hyphenation(const std::string& label) {
    std::set<std::string> out;
    for (size_t i = 1; i < label.size(); ++i)
        add(out, label, label.substr(0, i) + "-" + label.substr(i));
    return out;
}

std::set<std::string> gen_bitsquatting(const std::string& label) {
    std::set<std::string> out;
    for (size_t i = 0; i < label.size(); ++i) {
        for (int bit = 0; bit < 8; ++bit) {
            char flipped = static_cast<char>(label[i] ^ (1 << bit));
            if (!ascii_label_char(flipped)) continue; // unregistrable flips are noise
            std::string s = label;
            s[i] = flipped;
            add(out, label, s);
        }
    }
    return out;
}

std::set<std::string> gen_vowel_swap(const std::string& label) {
    static const std::string kVowels = "aeiou";
    std::set<std::string> out;
    for (size_t i = 0; i < label.size(); ++i) {
        if (kVowels.find(label[i]) == std::string::npos) continue;
        for (char v : kVowels) {
            std::string s = label;
            s[i] = v;
            add(out, label, s);
        }
    }
    return out;
}

std::set<std::string> gen_subdomain(const std::string& label) {
    std::set<std::string> out;
    for (size_t i = 1; i < label.size(); ++i) {
        if (label[i] == '-' || label[i - 1] == '-') continue;
        add(out, label, label.substr(0, i) + "." + label.substr(i));
    }
    return out;
}

std::set<std::string> gen_homoglyph(const std::string& label, const GeneratorConfig& cfg) {
    std::set<std::string> out;
    const size_t n = label.size();
    auto glyphs_at = [&](size_t i) -> const std::vector<std::string>* {
        auto it = cfg.homoglyphs.find(label[i]);
        return it == cfg.homoglyphs.end() ? nullptr : &it->second;
    };
    // one substituted position
    for (size_t i = 0; i < n; ++i) {
        const auto* gi = glyphs_at(i);
        if (!gi) continue;
        for (const std::string& g : *gi)
            add(out, label, label.substr(0, i) + g + label.substr(i + 1));
    }
    // two substituted positions
    for (size_t i = 0; i < n; ++i) {
        const auto* gi = glyphs_at(i);
        if (!gi) continue;
        for (size_t j = i + 1; j < n; ++j) {
            const auto* gj = glyphs_at(j);
            if (!gj) continue;
            for (const std::string& a : *gi)
                for (const std::string& b : *gj)
                    add(out, label,
                        label.substr(0, i) + a + label.substr(i + 1, j - i - 1) + b +
                            label.substr(j + 1));
        }
    }
    return out;
}

std::set<std::string> gen_various(const std::string& label) {
    std::set<std::string> out;
    add(out, label, "www" + label);
    add(out, label, "www-" + label);
    return out;
}

std::set<std::string> gen_dictionary(const std::string& label, const GeneratorConfig& cfg) {
    std::set<std::string> out;
    for (const std::string& word : cfg.dictionary) {
        if (word.empty()) continue;
        add(out, label, word + label);
        add(out, label, word + "-" + label);
        add(out, label, label + word);
        add(out, label, label + "-" + word);
    }
    return out;
}

} // namespace

std::set<std::string> apply_model(TransformModel model, const std::string& label,
                                  const GeneratorConfig& cfg) {
    switch (model) {
        case TransformModel::addition: return gen_addition(label);
        case TransformModel::bitsquatting: return gen_bitsquatting(label);
        case TransformModel::homoglyph: return gen_homoglyph(label, cfg);
        case TransformModel::hyphenation: return gen_hyphenation(label);
        case TransformModel::insertion: return gen_insertion(label, cfg);
        case TransformModel::omission: return gen_omission(label);
        case TransformModel::repetition: return gen_repetition(label);
        case TransformModel::replacement: return gen_replacement(label, cfg);
        case TransformModel::subdomain: return gen_subdomain(label);
        case TransformModel::transposition: return gen_transposition(label);
        case TransformModel::vowel_swap: return gen_vowel_swap(label);
        case TransformModel::various: return gen_various(label);
        case TransformModel::dictionary: return gen_dictionary(label, cfg);
    }
    throw std::invalid_argument("unknown transform model value");
}

std::vector<Candidate> generate_candidates(const TargetDomain& target,
                                           const GeneratorConfig& cfg) {
    std::vector<Candidate> out;
    const std::string target_fqdn = target.fqdn();

    for (TransformModel model : all_transform_models()) {
        if (!cfg.enabled_models.count(model)) continue;
        std::set<std::string> variants = apply_model(model, target.label, cfg);
        if (model == TransformModel::various) {
            // TLD folded into the label: binancecom.com
            std::string compact_tld = target.tld;
            compact_tld.erase(std::remove(compact_tld.begin(), compact_tld.end(), '.'),
                              compact_tld.end());
            variants.insert(target.label + compact_tld);
        }
        for (const std::string& variant : variants) {
            std::string unicode_form = variant + "." + target.tld;
            std::string ascii_form;
            try {
                ascii_form = encode_idn(unicode_form);
            } catch (const IdnError&) {
                continue; // unencodable label, cannot be registered
            }
            if (!valid_dns_domain(ascii_form)) continue;
            if (ascii_form == target_fqdn) continue;
            out.push_back(Candidate{model, unicode_form, ascii_form, target});
        }
    }

    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        if (a.ascii_form != b.ascii_form) return a.ascii_form < b.ascii_form;
        return model_tag(a.model) < model_tag(b.model);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Candidate& a, const Candidate& b) {
                              return a.ascii_form == b.ascii_form && a.model == b.model;
                          }),
              out.end());
    return out;
}

} // namespace scamscope
