#pragma once

#include "convexcalc/words.h"

#include <random>
#include <set>
#include <utility>
#include <vector>

namespace convexcalc {
namespace testcorpus {

inline Word random_reduced_word(std::mt19937_64& rng, int genus, int len) {
    Word w;
    for (int k = 0; k < len; ++k) {
        for (;;) {
            int g = 1 + static_cast<int>(rng() % (2 * genus));
            int x = (rng() % 2) ? g : -g;
            if (!w.empty() && x == -w.back()) continue;
            if (k == len - 1 && k > 0 && x == -w.front()) continue;
            w.push_back(x);
            break;
        }
    }
    return w;
}

// Deterministic pool of primitive classes, pairwise distinct up to
// conjugation and inversion.
inline std::vector<Word> corpus_words(int genus, int count,
                                      unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::vector<Word> pool;
    std::set<Word> seen;
    while (static_cast<int>(pool.size()) < count) {
        int len = 1 + static_cast<int>(rng() % 8);
        Word cw = cyclic_dehn_reduce(random_reduced_word(rng, genus, len), genus);
        if (cw.empty()) continue;
        Word canon = canonical_cyclic(cw, genus);
        if (cyclic_period(canon) != static_cast<int>(canon.size())) continue;
        Word icanon = canonical_cyclic(inverse_word(cw), genus);
        Word key = shortlex_less(canon, icanon) ? canon : icanon;
        if (!seen.insert(key).second) continue;
        pool.push_back(cw);
    }
    return pool;
}

inline std::vector<std::pair<int, int>> corpus_pairs(int pool_size) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < pool_size; ++i)
        for (int j = i + 1; j < pool_size; ++j)
            pairs.emplace_back(i, j);
    return pairs;
}

} // namespace testcorpus
} // namespace convexcalc
