#include "convexcalc/mcg.h"

#include "convexcalc/errors.h"

#include <array>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace convexcalc {

namespace {

Word commutator(int i) {
    return {gen_a(i), gen_b(i), -gen_a(i), -gen_b(i)};
}

// Waist curve between handles i and i+1: b_i^-1 b_{i+1}^-1 times the
// commutators of the remaining handles in cyclic order. Equals the class of
// the glued product of the two block neighbor words of the polygon.
Word waist_word(int i, int genus) {
    Word zc{-gen_b(i), -gen_b(i + 1)};
    for (int step = 2; step < genus; ++step) {
        int s = ((i - 1 + step) % genus) + 1;
        zc = concat(zc, commutator(s));
    }
    return zc;
}

struct GeneratorImages {
    // Images of moved positive letters; untouched letters map to themselves.
    std::vector<std::pair<int, Word>> moved;
};

struct TwistTables {
    std::vector<FamilyCurve> family;
    // images[idx][0] acts for exponent +1, images[idx][1] for -1.
    std::vector<std::array<GeneratorImages, 2>> images;
};

const TwistTables& tables_for(int genus) {
    static std::map<int, TwistTables> cache;
    auto it = cache.find(genus);
    if (it != cache.end()) return it->second;
    if (genus < 2) throw precondition_error("genus must be at least 2");

    TwistTables t;
    auto add = [&](const std::string& name, const Word& loop,
                   std::array<GeneratorImages, 2> imgs) {
        t.family.push_back({name, loop, homology_class(loop, genus)});
        t.images.push_back(std::move(imgs));
    };

    for (int i = 1; i <= genus; ++i) {
        std::array<GeneratorImages, 2> imgs;
        imgs[0].moved = {{gen_b(i), Word{gen_b(i), -gen_a(i)}}};
        imgs[1].moved = {{gen_b(i), Word{gen_b(i), gen_a(i)}}};
        add("a" + std::to_string(i), Word{gen_a(i)}, std::move(imgs));
    }
    for (int i = 1; i <= 2; ++i) {
        std::array<GeneratorImages, 2> imgs;
        imgs[0].moved = {{gen_a(i), Word{gen_a(i), gen_b(i)}}};
        imgs[1].moved = {{gen_a(i), Word{gen_a(i), -gen_b(i)}}};
        add("b" + std::to_string(i), Word{gen_b(i)}, std::move(imgs));
    }
    for (int i = 1; i < genus; ++i) {
        // The twist moves only a_i and a_{i+1}; both waist letters b_i and
        // b_{i+1} stay put, which makes the inverse table exact.
        Word zc = waist_word(i, genus);
        Word zinv = inverse_word(zc);
        std::array<GeneratorImages, 2> imgs;
        imgs[0].moved = {
            {gen_a(i), concat(zinv, Word{gen_a(i)})},
            {gen_a(i + 1),
             concat(conjugated(zinv, Word{gen_b(i)}), Word{gen_a(i + 1)})}};
        imgs[1].moved = {
            {gen_a(i), concat(zc, Word{gen_a(i)})},
            {gen_a(i + 1),
             concat(conjugated(zc, Word{gen_b(i)}), Word{gen_a(i + 1)})}};
        add("z" + std::to_string(i), zc, std::move(imgs));
    }

    return cache.emplace(genus, std::move(t)).first->second;
}

Word substitute_once(const Word& x, const GeneratorImages& imgs) {
    Word out;
    out.reserve(x.size());
    for (int letter : x) {
        const Word* img = nullptr;
        for (const auto& [moved, w] : imgs.moved)
            if (moved == std::abs(letter)) {
                img = &w;
                break;
            }
        if (!img) {
            out.push_back(letter);
        } else if (letter > 0) {
            out.insert(out.end(), img->begin(), img->end());
        } else {
            Word inv = inverse_word(*img);
            out.insert(out.end(), inv.begin(), inv.end());
        }
    }
    free_reduce(out);
    return out;
}

Word apply_factor(const Word& x, const TwistFactor& f, int genus) {
    const TwistTables& t = tables_for(genus);
    const auto& imgs = t.images[f.curve][f.exponent > 0 ? 0 : 1];
    Word out = x;
    for (int k = 0; k < std::abs(f.exponent); ++k)
        out = dehn_reduce(substitute_once(out, imgs), genus);
    return out;
}

} // namespace

const std::vector<FamilyCurve>& twist_family(int genus) {
    return tables_for(genus).family;
}

int twist_index(const std::string& name, int genus) {
    const auto& fam = twist_family(genus);
    for (size_t k = 0; k < fam.size(); ++k)
        if (fam[k].name == name) return static_cast<int>(k);
    throw parse_error("unknown twist curve '" + name + "' at genus " +
                      std::to_string(genus));
}

MappingClassWord parse_mapping_class(const std::string& text, int genus) {
    MappingClassWord f;
    f.genus = genus;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "id" || tok == "identity") continue;
        if (tok.size() < 3 || tok[0] != 'T')
            throw parse_error("bad twist token '" + tok + "'");
        size_t p = 1;
        if (tok[p] != 'a' && tok[p] != 'b' && tok[p] != 'z')
            throw parse_error("bad twist token '" + tok + "'");
        size_t q = p + 1;
        while (q < tok.size() && std::isdigit(static_cast<unsigned char>(tok[q])))
            ++q;
        if (q == p + 1) throw parse_error("bad twist token '" + tok + "'");
        std::string name = tok.substr(p, q - p);
        int exp = 1;
        if (q < tok.size()) {
            std::string rest = tok.substr(q);
            if (rest[0] == '^') rest = rest.substr(1);
            size_t used = 0;
            try {
                exp = std::stoi(rest, &used);
            } catch (const std::exception&) {
                throw parse_error("bad twist exponent in '" + tok + "'");
            }
            if (used != rest.size())
                throw parse_error("bad twist exponent in '" + tok + "'");
        }
        if (exp != 0) f.factors.push_back({twist_index(name, genus), exp});
    }
    return f;
}

std::string format_mapping_class(const MappingClassWord& f) {
    if (f.factors.empty()) return "id";
    const auto& fam = twist_family(f.genus);
    std::string out;
    for (const auto& [curve, exp] : f.factors) {
        if (!out.empty()) out += ' ';
        out += 'T' + fam[curve].name;
        if (exp != 1) out += '^' + std::to_string(exp);
    }
    return out;
}

MappingClassWord inverse_mapping_class(const MappingClassWord& f) {
    MappingClassWord out;
    out.genus = f.genus;
    for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it)
        out.factors.push_back({it->curve, -it->exponent});
    return out;
}

MappingClassWord compose_mapping_class(const MappingClassWord& f,
                                       const MappingClassWord& g) {
    if (f.genus != g.genus)
        throw precondition_error("mapping classes live on different surfaces");
    MappingClassWord out = f;
    out.factors.insert(out.factors.end(), g.factors.begin(), g.factors.end());
    return out;
}

Word apply_to_loop(const MappingClassWord& f, const Word& x) {
    Word out = x;
    for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it)
        out = apply_factor(out, *it, f.genus);
    return out;
}

Word apply_mapping_class(const MappingClassWord& f, const Word& c) {
    return canonical_cyclic(apply_to_loop(f, c), f.genus);
}

IMat homology_action(const MappingClassWord& f) {
    int n = 2 * f.genus;
    const auto& fam = twist_family(f.genus);
    IMat a = imat_identity(n);
    for (const auto& [curve, exp] : f.factors) {
        const HVec& c = fam[curve].cls;
        IMat m = imat_identity(n);
        for (int j = 0; j < n; ++j) {
            HVec e(n, 0);
            e[j] = 1;
            long long s = static_cast<long long>(exp) * sym_pairing(e, c);
            for (int i = 0; i < n; ++i) m[i][j] += s * c[i];
        }
        a = imat_mul(a, m);
    }
    return a;
}

PaReport pa_certificate(const MappingClassWord& f, int bound, int cap) {
    int genus = f.genus;
    const auto& fam = twist_family(genus);
    PaReport rep;
    rep.bound = bound;

    std::set<Word> visited;
    std::deque<Word> queue;
    for (const auto& fc : fam) {
        Word u = unoriented_canonical(fc.loop, genus);
        if (visited.insert(u).second) queue.push_back(u);
    }
    while (!queue.empty()) {
        if (static_cast<int>(visited.size()) >= cap) {
            rep.family_exhausted = false;
            break;
        }
        Word cur = queue.front();
        queue.pop_front();
        for (size_t h = 0; h < fam.size(); ++h)
            for (int sign : {1, -1}) {
                MappingClassWord tw;
                tw.genus = genus;
                tw.factors.push_back({static_cast<int>(h), sign});
                Word img = unoriented_canonical(apply_to_loop(tw, cur), genus);
                if (static_cast<int>(img.size()) > bound) continue;
                if (visited.insert(img).second) queue.push_back(img);
            }
    }

    rep.curves_checked = static_cast<int>(visited.size());
    for (const Word& c : visited) {
        Word img = unoriented_canonical(apply_to_loop(f, c), genus);
        if (img == c) {
            rep.witness = c;
            for (const auto& fc : fam)
                if (unoriented_canonical(fc.loop, genus) == c)
                    rep.witness_name = fc.name;
            break;
        }
    }
    rep.no_invariant_curve = rep.witness.empty();

    std::vector<long long> poly = char_poly(homology_action(f));
    for (const auto& [n, phi] : cyclotomics_up_to(2 * genus))
        if (poly_divides(phi, poly)) rep.cyclotomic_hits.push_back(n);
    rep.cyclotomic_free = rep.cyclotomic_hits.empty();
    return rep;
}

} // namespace convexcalc
