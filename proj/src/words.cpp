#include "convexcalc/words.h"
#include "convexcalc/errors.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <deque>

namespace convexcalc {

int gen_a(int i) { return 2 * (i - 1) + 1; }
int gen_b(int i) { return 2 * (i - 1) + 2; }

int gen_index(int letter) { return std::abs(letter) - 1; }

int letter_key(int letter) { return 2 * gen_index(letter) + (letter < 0 ? 1 : 0); }

std::string letter_name(int letter) {
    int idx = gen_index(letter);
    char base = (idx % 2 == 0) ? 'a' : 'b';
    if (letter < 0) base = static_cast<char>(std::toupper(base));
    return std::string(1, base) + std::to_string(idx / 2 + 1);
}

Word parse_word(const std::string& text, int genus) {
    Word w;
    size_t p = 0;
    while (p < text.size()) {
        char c = text[p];
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '*' || c == '.') {
            ++p;
            continue;
        }
        if (!std::isalpha(static_cast<unsigned char>(c)))
            throw parse_error("unexpected character '" + std::string(1, c) + "' in word");
        char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (lower != 'a' && lower != 'b')
            throw parse_error("unknown generator letter '" + std::string(1, c) + "'");
        bool inv = std::isupper(static_cast<unsigned char>(c));
        ++p;
        size_t d0 = p;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        if (p == d0) throw parse_error("generator letter without index in word");
        int idx = std::stoi(text.substr(d0, p - d0));
        if (idx < 1 || idx > genus)
            throw parse_error("generator index " + std::to_string(idx) +
                              " out of range for genus " + std::to_string(genus));
        int letter = (lower == 'a') ? gen_a(idx) : gen_b(idx);
        w.push_back(inv ? -letter : letter);
    }
    return w;
}

std::string format_word(const Word& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += letter_name(w[i]);
    }
    return out;
}

std::string format_word_compact(const Word& w) {
    std::string out;
    for (int x : w) out += letter_name(x);
    return out;
}

Word inverse_word(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& x : out) x = -x;
    return out;
}

Word concat(const Word& u, const Word& v) {
    Word out = u;
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

Word conjugated(const Word& w, const Word& u) {
    return concat(concat(u, w), inverse_word(u));
}

Word word_pow(const Word& w, int k) {
    Word base = (k < 0) ? inverse_word(w) : w;
    Word out;
    for (int i = 0; i < std::abs(k); ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
}

void free_reduce(Word& w) {
    Word out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    w = std::move(out);
}

Word cyclic_reduce(const Word& w0) {
    Word w = w0;
    free_reduce(w);
    size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
        ++lo;
        --hi;
    }
    return Word(w.begin() + lo, w.begin() + hi);
}

Word relator(int genus) {
    Word r;
    for (int i = 1; i <= genus; ++i) {
        r.push_back(gen_a(i));
        r.push_back(gen_b(i));
        r.push_back(-gen_a(i));
        r.push_back(-gen_b(i));
    }
    return r;
}

namespace {

// All cyclic rotations of the relator and its inverse.
std::vector<Word> relator_rotations(int genus) {
    std::vector<Word> rots;
    for (Word r : {relator(genus), inverse_word(relator(genus))}) {
        size_t n = r.size();
        for (size_t s = 0; s < n; ++s) {
            Word rot;
            rot.reserve(n);
            for (size_t k = 0; k < n; ++k) rot.push_back(r[(s + k) % n]);
            rots.push_back(std::move(rot));
        }
    }
    return rots;
}

// Longest prefix of rot matching w starting at p (cyclic or linear scan).
size_t match_len(const Word& w, size_t p, const Word& rot, bool cyclic) {
    size_t n = w.size();
    size_t limit = cyclic ? n : n - p;
    limit = std::min(limit, rot.size());
    size_t k = 0;
    while (k < limit && w[(p + k) % n] == rot[k]) ++k;
    return k;
}

// Replace w[p .. p+len) by the inverse of rot[len..end). In linear mode the
// match never wraps and the element is preserved; in cyclic mode the result
// may come back rotated, which only matters up to conjugacy.
Word rewrite(const Word& w, size_t p, size_t len, const Word& rot, bool cyclic) {
    Word tail(rot.begin() + static_cast<long>(len), rot.end());
    Word repl = inverse_word(tail);
    size_t n = w.size();
    Word out;
    out.reserve(n - len + repl.size());
    if (!cyclic) {
        out.assign(w.begin(), w.begin() + static_cast<long>(p));
        out.insert(out.end(), repl.begin(), repl.end());
        out.insert(out.end(), w.begin() + static_cast<long>(p + len), w.end());
    } else {
        for (size_t k = 0; k < n - len; ++k) out.push_back(w[(p + len + k) % n]);
        out.insert(out.end(), repl.begin(), repl.end());
    }
    return out;
}

// One greedy pass: rewrite the longest relator match of length >= minlen.
bool rewrite_step(Word& w, const std::vector<Word>& rots, size_t minlen, bool cyclic) {
    if (w.empty()) return false;
    size_t best_len = 0, best_p = 0, best_r = 0;
    size_t n = w.size();
    for (size_t r = 0; r < rots.size(); ++r) {
        for (size_t p = 0; p < n; ++p) {
            size_t k = match_len(w, p, rots[r], cyclic);
            if (k > best_len) {
                best_len = k;
                best_p = p;
                best_r = r;
            }
        }
    }
    if (best_len < minlen) return false;
    w = rewrite(w, best_p, best_len, rots[best_r], cyclic);
    return true;
}

Word least_rotation(const Word& w) {
    if (w.empty()) return w;
    size_t n = w.size();
    Word best = w;
    Word cur = w;
    for (size_t s = 1; s < n; ++s) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        bool less = std::lexicographical_compare(
            cur.begin(), cur.end(), best.begin(), best.end(),
            [](int x, int y) { return letter_key(x) < letter_key(y); });
        if (less) best = cur;
    }
    return best;
}

} // namespace

Word dehn_reduce(Word w, int genus) {
    auto rots = relator_rotations(genus);
    size_t half = rots[0].size() / 2;
    free_reduce(w);
    while (rewrite_step(w, rots, half + 1, false)) free_reduce(w);
    return w;
}

Word cyclic_dehn_reduce(Word w, int genus) {
    auto rots = relator_rotations(genus);
    size_t half = rots[0].size() / 2;
    w = cyclic_reduce(w);
    while (rewrite_step(w, rots, half + 1, true)) w = cyclic_reduce(w);
    return w;
}

bool is_trivial(const Word& w, int genus) {
    return dehn_reduce(w, genus).empty();
}

bool equal_elements(const Word& u, const Word& v, int genus) {
    return is_trivial(concat(u, inverse_word(v)), genus);
}

Word canonical_cyclic(const Word& w0, int genus) {
    auto rots = relator_rotations(genus);
    size_t half = rots[0].size() / 2;
    Word w = cyclic_dehn_reduce(w0, genus);
restart:
    if (w.empty()) return w;
    std::set<Word> seen;
    std::deque<Word> queue;
    Word seed = least_rotation(w);
    seen.insert(seed);
    queue.push_back(seed);
    while (!queue.empty()) {
        Word u = queue.front();
        queue.pop_front();
        size_t n = u.size();
        for (size_t r = 0; r < rots.size(); ++r) {
            for (size_t p = 0; p < n; ++p) {
                if (match_len(u, p, rots[r], true) < half) continue;
                Word v = rewrite(u, p, half, rots[r], true);
                v = cyclic_reduce(v);
                if (v.size() < n) {
                    w = cyclic_dehn_reduce(v, genus);
                    goto restart;
                }
                Word c = least_rotation(v);
                if (seen.insert(c).second) {
                    if (seen.size() > 100000)
                        throw precondition_error("conjugacy closure exceeded safety cap");
                    queue.push_back(c);
                }
            }
        }
    }
    return *std::min_element(seen.begin(), seen.end(), shortlex_less);
}

bool conjugate_elements(const Word& u, const Word& v, int genus) {
    return canonical_cyclic(u, genus) == canonical_cyclic(v, genus);
}

Word unoriented_canonical(const Word& w, int genus) {
    Word fwd = canonical_cyclic(w, genus);
    Word bwd = canonical_cyclic(inverse_word(w), genus);
    return shortlex_less(fwd, bwd) ? fwd : bwd;
}

int cyclic_period(const Word& w) {
    size_t n = w.size();
    if (n == 0) return 0;
    for (size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (size_t k = 0; k < n && ok; ++k) ok = (w[k] == w[(k + p) % n]);
        if (ok) return static_cast<int>(p);
    }
    return static_cast<int>(n);
}

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [](int x, int y) { return letter_key(x) < letter_key(y); });
}

} // namespace convexcalc
