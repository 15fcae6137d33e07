#include "convexcalc/finder.h"
#include "convexcalc/errors.h"
#include "convexcalc/mcg.h"

#include <algorithm>
#include <set>
#include <tuple>

namespace convexcalc {

Word twist_image(Intersector& eng, const Word& c, const Word& x, int k) {
    int genus = eng.surface().genus();
    Word cc = canonical_cyclic(c, genus);
    Word xc = canonical_cyclic(x, genus);
    Word cinv = canonical_cyclic(inverse_word(cc), genus);
    if (xc == cc || xc == cinv) return xc;
    if (!eng.is_simple(cc))
        throw precondition_error("twist curve must be simple");
    Word res;
    for (const Crossing& cr : eng.crossings(xc, cc))
        res = concat(res, conjugated(word_pow(cc, k * cr.sigma), cr.coset));
    res = concat(res, xc);
    return canonical_cyclic(res, genus);
}

std::vector<ArcSurgery> arc_surgeries(Intersector& eng, const Word& x, const Word& c) {
    int genus = eng.surface().genus();
    Word X = canonical_cyclic(x, genus);
    Word C = canonical_cyclic(c, genus);
    auto cr = eng.crossings(X, C);
    int n_cr = static_cast<int>(cr.size());
    std::vector<ArcSurgery> out;
    std::set<Word> seen;
    for (int i = 0; i < n_cr; ++i) {
        for (int j = 0; j < n_cr; ++j) {
            int wraps[2], hops[2];
            if (i == j) {
                wraps[0] = 1, wraps[1] = -1;
                hops[0] = 1, hops[1] = -1;
            } else {
                wraps[0] = (cr[j].t > cr[i].t) ? 0 : 1;
                wraps[1] = (cr[j].t < cr[i].t) ? 0 : -1;
                hops[0] = (cr[i].s > cr[j].s) ? 0 : 1;
                hops[1] = (cr[i].s < cr[j].s) ? 0 : -1;
            }
            for (int w : wraps) {
                for (int n : hops) {
                    Word d = word_pow(X, w);
                    d = concat(d, cr[j].coset);
                    d = concat(d, word_pow(C, n));
                    d = concat(d, inverse_word(cr[i].coset));
                    d = canonical_cyclic(d, genus);
                    if (d.empty()) continue;
                    // Proper powers are never embedded; drop them here.
                    if (cyclic_period(d) != static_cast<int>(d.size())) continue;
                    if (!seen.insert(d).second) continue;
                    out.push_back({i, j, w, n, std::move(d)});
                }
            }
        }
    }
    return out;
}

Word once_pair_boundary(Intersector& eng, const Word& x, const Word& y) {
    int genus = eng.surface().genus();
    Word X = canonical_cyclic(x, genus);
    Word Y = canonical_cyclic(y, genus);
    if (eng.geometric(X, Y) != 1)
        throw precondition_error("neighborhood boundary needs a once-meeting pair");
    auto cr = eng.crossings(X, Y);
    for (int e : {1, -1}) {
        Word side = conjugated(word_pow(Y, e), cr[0].coset);
        Word d = concat(concat(X, side), concat(inverse_word(X), inverse_word(side)));
        d = canonical_cyclic(d, genus);
        if (d.empty()) continue;
        if (!is_null_class(homology_class(d, genus))) continue;
        if (!eng.is_simple(d)) continue;
        if (eng.geometric(d, X) != 0 || eng.geometric(d, Y) != 0) continue;
        return d;
    }
    throw precision_exhausted("one-holed torus boundary did not verify");
}

namespace {

struct FrontierLess {
    bool operator()(const std::tuple<long long, Word>& a,
                    const std::tuple<long long, Word>& b) const {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        const Word& u = std::get<1>(a);
        const Word& v = std::get<1>(b);
        if (shortlex_less(u, v)) return true;
        if (shortlex_less(v, u)) return false;
        return u < v;
    }
};

} // namespace

std::optional<Word> find_curve(Intersector& eng, const CurveQuery& q) {
    int genus = eng.surface().genus();

    std::vector<Word> moves;
    std::set<Word> move_seen;
    auto add_move = [&](const Word& w) {
        Word u = unoriented_canonical(w, genus);
        if (u.empty() || cyclic_period(u) != static_cast<int>(u.size())) return;
        if (!move_seen.insert(u).second) return;
        if (!eng.is_simple(u)) return;
        moves.push_back(u);
    };
    for (const FamilyCurve& f : twist_family(genus)) add_move(f.loop);
    for (const auto& [pw, want] : q.pattern) add_move(pw);
    for (const auto& [pw, bound] : q.below) add_move(pw);

    auto defect = [&](const Word& w) {
        long long d = 0;
        for (const auto& [pw, want] : q.pattern)
            d += std::llabs(eng.geometric(w, pw) - want);
        for (const auto& [pw, bound] : q.below)
            d += std::max(0LL, eng.geometric(w, pw) - bound + 1);
        return d;
    };
    auto admissible = [&](const Word& w) {
        HVec h = homology_class(w, genus);
        if (q.nonseparating && is_null_class(h)) return false;
        for (const HVec& av : q.avoid_classes)
            if (h == av || h == hvec_neg(av)) return false;
        return true;
    };

    std::set<std::tuple<long long, Word>, FrontierLess> frontier;
    std::set<Word> visited;
    auto push = [&](const Word& w) {
        Word u = unoriented_canonical(w, genus);
        if (u.empty() || cyclic_period(u) != static_cast<int>(u.size())) return;
        if (!visited.insert(u).second) return;
        frontier.emplace(defect(u), u);
    };
    for (const Word& s : q.seeds) {
        Word u = unoriented_canonical(s, genus);
        if (u.empty() || cyclic_period(u) != static_cast<int>(u.size())) continue;
        if (!eng.is_simple(u)) continue;
        push(u);
    }
    for (const Word& m : moves) push(m);

    for (int pops = 0; pops < q.max_pops && !frontier.empty(); ++pops) {
        auto [cost, cur] = *frontier.begin();
        frontier.erase(frontier.begin());
        if (cost == 0 && admissible(cur)) return cur;
        for (const Word& m : moves)
            for (int e : {1, -1}) push(twist_image(eng, m, cur, e));
    }
    return std::nullopt;
}

Word dual_curve(Intersector& eng, const Word& a) {
    CurveQuery q;
    q.pattern.emplace_back(a, 1);
    auto r = find_curve(eng, q);
    if (!r) throw surgery_stuck("no dual curve found for " + format_word(a));
    return *r;
}

} // namespace convexcalc
