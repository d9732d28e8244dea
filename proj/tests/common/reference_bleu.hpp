#pragma once

// Stand-alone sentence BLEU used as a test oracle. Written without reference
// to the library implementation: n-grams are keyed as joined strings, the
// geometric mean is taken as a product of precisions, and tokenization scans
// by character class.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace formgym::testing {

inline std::vector<std::string> reference_tokens(std::string_view text) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        auto is_sep = [](unsigned char c) { return std::isspace(c) || std::ispunct(c); };
        while (i < text.size() && is_sep(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !is_sep(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) {
            std::string tok(text.substr(i, j - i));
            for (char& c : tok) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            out.push_back(std::move(tok));
        }
        i = j;
    }
    return out;
}

inline std::unordered_map<std::string, int> ngram_counts(const std::vector<std::string>& toks, std::size_t n) {
    std::unordered_map<std::string, int> counts;
    if (toks.size() < n) return counts;
    for (std::size_t i = 0; i + n <= toks.size(); ++i) {
        std::string key;
        for (std::size_t k = 0; k < n; ++k) key += toks[i + k] + '\x1f';
        counts[key] += 1;
    }
    return counts;
}

/// Single-reference BLEU without smoothing; orders beyond the candidate
/// length are left out of the geometric mean.
inline double reference_bleu(std::string_view candidate, std::string_view reference, int max_n = 4) {
    const auto c = reference_tokens(candidate);
    const auto r = reference_tokens(reference);
    if (c.empty()) return 0.0;
    const std::size_t orders = std::min<std::size_t>(static_cast<std::size_t>(max_n), c.size());
    double product = 1.0;
    for (std::size_t n = 1; n <= orders; ++n) {
        const auto cc = ngram_counts(c, n);
        const auto rc = ngram_counts(r, n);
        int matched = 0;
        int total = 0;
        for (const auto& [gram, count] : cc) {
            total += count;
            const auto it = rc.find(gram);
            matched += it == rc.end() ? 0 : std::min(count, it->second);
        }
        if (matched == 0) return 0.0;
        product *= static_cast<double>(matched) / total;
    }
    const double geo = std::pow(product, 1.0 / static_cast<double>(orders));
    const double bp = c.size() >= r.size() ? 1.0 : std::exp(1.0 - static_cast<double>(r.size()) / c.size());
    return bp * geo;
}

}  // namespace formgym::testing
