#include "convexcalc/curvecomplex.h"

#include "convexcalc/errors.h"
#include "convexcalc/finder.h"
#include "convexcalc/homology.h"

#include <algorithm>
#include <string>

namespace convexcalc {

namespace {

bool same_class(Intersector& eng, const Word& u, const Word& v) {
    int g = eng.surface().genus();
    return unoriented_canonical(u, g) == unoriented_canonical(v, g);
}

void require_curve(Intersector& eng, const Word& w, const char* role, bool nonsep) {
    int g = eng.surface().genus();
    Word c = canonical_cyclic(w, g);
    if (c.empty())
        throw precondition_error(std::string(role) + " is contractible");
    if (cyclic_period(c) != static_cast<int>(c.size()))
        throw precondition_error(std::string(role) + " is a proper power");
    if (!eng.is_simple(c))
        throw precondition_error(std::string(role) + " must be simple");
    if (nonsep && is_null_class(homology_class(c, g)))
        throw precondition_error(std::string(role) + " must be nonseparating");
}

// Cut-and-paste candidates for a crossing pair, both travel directions.
std::vector<Word> surgery_seeds(Intersector& eng, const Word& x, const Word& c) {
    std::vector<Word> out;
    if (eng.geometric(x, c) == 0) return out;
    for (const ArcSurgery& a : arc_surgeries(eng, x, c)) out.push_back(a.cls);
    for (const ArcSurgery& a : arc_surgeries(eng, c, x)) out.push_back(a.cls);
    return out;
}

// Chain from one nonseparating class to a different one with consecutive
// intersection number 1, optionally staying disjoint from an anchor curve.
// Each step strictly reduces the count against the target.
std::vector<Word> once_chain(Intersector& eng, const Word& from, const Word& to,
                             const Word* anchor) {
    int g = eng.surface().genus();
    std::vector<Word> terms{from};
    Word cur = from;
    for (int guard = 0;; ++guard) {
        if (guard > 64) throw surgery_stuck("once connection failed to converge");
        long long n = eng.geometric(cur, to);
        if (n == 1) {
            terms.push_back(to);
            break;
        }
        CurveQuery q;
        if (anchor) {
            q.pattern.emplace_back(*anchor, 0);
            q.avoid_classes.push_back(homology_class(*anchor, g));
        }
        if (n == 0) {
            q.pattern.emplace_back(cur, 1);
            q.pattern.emplace_back(to, 1);
            auto bridge = find_curve(eng, q);
            if (!bridge)
                throw surgery_stuck("no bridge meets both " + format_word(cur) +
                                    " and " + format_word(to) + " once");
            terms.push_back(*bridge);
            terms.push_back(to);
            break;
        }
        q.pattern.emplace_back(cur, 1);
        q.below.emplace_back(to, n);
        q.seeds = surgery_seeds(eng, to, cur);
        auto step = find_curve(eng, q);
        if (!step)
            throw surgery_stuck("no reduction toward " + format_word(to));
        terms.push_back(*step);
        cur = *step;
    }
    return terms;
}

CurveSequence finish(Intersector& eng, CurveSequence s) {
    int g = eng.surface().genus();
    for (Word& w : s.curves) w = canonical_cyclic(w, g);
    for (size_t i = 0; i + 1 < s.curves.size(); ++i) {
        if (same_class(eng, s.curves[i], s.curves[i + 1]) ||
            (i + 2 < s.curves.size() && same_class(eng, s.curves[i], s.curves[i + 2])))
            s.has_parallel_copies = true;
    }
    SequenceCheck chk = verify_sequence(eng, s);
    if (!chk.ok)
        throw surgery_stuck("sequence postcondition failed: " + chk.failures.front());
    return s;
}

} // namespace

std::string profile_name(SequenceProfile p) {
    switch (p) {
        case SequenceProfile::disjoint: return "disjoint";
        case SequenceProfile::once: return "once";
        case SequenceProfile::fact1: return "fact1";
        case SequenceProfile::rel: return "rel";
        case SequenceProfile::fact0: return "fact0";
    }
    return "unknown";
}

SequenceCheck verify_sequence(Intersector& eng, const CurveSequence& seq) {
    int g = eng.surface().genus();
    SequenceCheck out;
    auto fail = [&](std::string msg) {
        out.ok = false;
        out.failures.push_back(std::move(msg));
    };
    if (seq.curves.empty()) {
        fail("sequence has no terms");
        return out;
    }
    bool need_nonsep = seq.profile != SequenceProfile::disjoint;
    for (size_t i = 0; i < seq.curves.size(); ++i) {
        std::string tag = "term " + std::to_string(i);
        Word c = canonical_cyclic(seq.curves[i], g);
        if (c.empty()) {
            fail(tag + " is contractible");
            continue;
        }
        if (cyclic_period(c) != static_cast<int>(c.size())) {
            fail(tag + " is a proper power");
            continue;
        }
        if (!eng.is_simple(c)) fail(tag + " is not simple");
        if (need_nonsep && is_null_class(homology_class(c, g)))
            fail(tag + " is separating");
    }
    if (!out.ok) return out;

    auto pair_count = [&](size_t i, size_t j) {
        return eng.geometric(seq.curves[i], seq.curves[j]);
    };
    auto pair_tag = [](size_t i, size_t j) {
        return "terms " + std::to_string(i) + " and " + std::to_string(j);
    };
    switch (seq.profile) {
        case SequenceProfile::disjoint:
            for (size_t i = 1; i < seq.curves.size(); ++i)
                if (pair_count(i - 1, i) != 0) fail(pair_tag(i - 1, i) + " are not disjoint");
            break;
        case SequenceProfile::once:
            for (size_t i = 1; i < seq.curves.size(); ++i)
                if (pair_count(i - 1, i) != 1) fail(pair_tag(i - 1, i) + " do not meet once");
            break;
        case SequenceProfile::fact1:
            for (size_t i = 1; i < seq.curves.size(); ++i) {
                if (pair_count(i - 1, i) != 0) fail(pair_tag(i - 1, i) + " are not disjoint");
                HVec hu = homology_class(seq.curves[i - 1], g);
                HVec hv = homology_class(seq.curves[i], g);
                if (hu == hv || hu == hvec_neg(hv))
                    fail(pair_tag(i - 1, i) + " are homologous");
            }
            break;
        case SequenceProfile::rel:
            for (size_t i = 0; i < seq.curves.size(); ++i)
                if (eng.geometric(seq.curves[i], seq.rel_anchor) != 0)
                    fail("term " + std::to_string(i) + " meets the anchor");
            for (size_t i = 1; i < seq.curves.size(); ++i)
                if (pair_count(i - 1, i) != 1) fail(pair_tag(i - 1, i) + " do not meet once");
            break;
        case SequenceProfile::fact0:
            for (size_t i = 1; i < seq.curves.size(); ++i)
                if (pair_count(i - 1, i) != 1) fail(pair_tag(i - 1, i) + " do not meet once");
            for (size_t i = 2; i < seq.curves.size(); ++i)
                if (pair_count(i - 2, i) != 0) fail(pair_tag(i - 2, i) + " are not disjoint");
            break;
    }
    return out;
}

CurveSequence connect_disjoint(Intersector& eng, const Word& a, const Word& b) {
    require_curve(eng, a, "first curve", false);
    require_curve(eng, b, "second curve", false);
    int g = eng.surface().genus();
    Word A = canonical_cyclic(a, g);
    Word B = canonical_cyclic(b, g);
    CurveSequence s;
    s.profile = SequenceProfile::disjoint;
    s.curves = {A};
    if (same_class(eng, A, B)) {
        if (A != B) s.curves.push_back(B);
        return finish(eng, std::move(s));
    }
    Word cur = A;
    for (int guard = 0;; ++guard) {
        if (guard > 64) throw surgery_stuck("disjoint connection failed to converge");
        long long n = eng.geometric(cur, B);
        if (n == 0) {
            s.curves.push_back(B);
            break;
        }
        CurveQuery mid;
        mid.nonseparating = false;
        mid.pattern = {{cur, 0}, {B, 0}};
        mid.seeds = surgery_seeds(eng, cur, B);
        if (auto m = find_curve(eng, mid)) {
            s.curves.push_back(*m);
            s.curves.push_back(B);
            break;
        }
        // The pair fills the surface; peel off one curve at a time instead.
        CurveQuery step;
        step.nonseparating = false;
        step.pattern = {{cur, 0}};
        step.below = {{B, n}};
        step.seeds = surgery_seeds(eng, cur, B);
        auto nxt = find_curve(eng, step);
        if (!nxt)
            throw surgery_stuck("no curve disjoint from " + format_word(cur) +
                                " with fewer crossings of " + format_word(B));
        s.curves.push_back(*nxt);
        cur = *nxt;
    }
    return finish(eng, std::move(s));
}

CurveSequence connect_once(Intersector& eng, const Word& a, const Word& b) {
    require_curve(eng, a, "first curve", true);
    require_curve(eng, b, "second curve", true);
    int g = eng.surface().genus();
    Word A = canonical_cyclic(a, g);
    Word B = canonical_cyclic(b, g);
    CurveSequence s;
    s.profile = SequenceProfile::once;
    if (same_class(eng, A, B))
        s.curves = {A, dual_curve(eng, A), B};
    else
        s.curves = once_chain(eng, A, B, nullptr);
    return finish(eng, std::move(s));
}

CurveSequence connect_fact1(Intersector& eng, const Word& a, const Word& b) {
    require_curve(eng, a, "first curve", true);
    require_curve(eng, b, "second curve", true);
    int g = eng.surface().genus();
    Word A = canonical_cyclic(a, g);
    Word B = canonical_cyclic(b, g);
    CurveSequence s;
    s.profile = SequenceProfile::fact1;
    HVec ha = homology_class(A, g);
    HVec hb = homology_class(B, g);
    if (eng.geometric(A, B) == 0 && ha != hb && ha != hvec_neg(hb)) {
        s.curves = {A, B};
        return finish(eng, std::move(s));
    }
    CurveSequence base = connect_once(eng, A, B);
    s.curves = {base.curves.front()};
    for (size_t i = 0; i + 1 < base.curves.size(); ++i) {
        const Word& u = base.curves[i];
        const Word& v = base.curves[i + 1];
        // Nonseparating curve off the one-holed torus around u cup v.
        CurveQuery q;
        q.pattern = {{u, 0}, {v, 0}};
        q.avoid_classes = {homology_class(u, g), homology_class(v, g)};
        auto beta = find_curve(eng, q);
        if (!beta)
            throw surgery_stuck("no interleaving curve for " + format_word(u) +
                                " and " + format_word(v));
        s.curves.push_back(*beta);
        s.curves.push_back(v);
    }
    return finish(eng, std::move(s));
}

CurveSequence connect_rel(Intersector& eng, const Word& alpha, const Word& b,
                          const Word& b2) {
    require_curve(eng, alpha, "anchor curve", true);
    require_curve(eng, b, "second curve", true);
    require_curve(eng, b2, "third curve", true);
    int g = eng.surface().genus();
    Word AL = canonical_cyclic(alpha, g);
    Word B = canonical_cyclic(b, g);
    Word C = canonical_cyclic(b2, g);
    if (eng.geometric(AL, B) != 0)
        throw precondition_error("second curve must be disjoint from the anchor");
    if (eng.geometric(AL, C) != 0)
        throw precondition_error("third curve must be disjoint from the anchor");
    HVec hal = homology_class(AL, g);
    auto homologous_to_anchor = [&](const Word& w) {
        HVec h = homology_class(w, g);
        return h == hal || h == hvec_neg(hal);
    };
    if (homologous_to_anchor(B))
        throw precondition_error("second curve must not be homologous to the anchor");
    if (homologous_to_anchor(C))
        throw precondition_error("third curve must not be homologous to the anchor");
    CurveSequence s;
    s.profile = SequenceProfile::rel;
    s.rel_anchor = AL;
    if (same_class(eng, B, C)) {
        if (B == C) {
            s.curves = {B};
        } else {
            CurveQuery q;
            q.pattern = {{AL, 0}, {B, 1}};
            q.avoid_classes = {hal};
            auto mid = find_curve(eng, q);
            if (!mid)
                throw surgery_stuck("no once-partner of " + format_word(B) +
                                    " avoids the anchor");
            s.curves = {B, *mid, C};
        }
    } else {
        s.curves = once_chain(eng, B, C, &AL);
    }
    return finish(eng, std::move(s));
}

CurveSequence connect_fact0(Intersector& eng, const Word& a, const Word& b) {
    require_curve(eng, a, "first curve", true);
    require_curve(eng, b, "second curve", true);
    std::vector<Word> s = connect_once(eng, a, b).curves;

    auto skip_profile = [&]() {
        std::vector<long long> v;
        for (size_t i = 0; i + 2 < s.size(); ++i)
            v.push_back(eng.geometric(s[i], s[i + 2]));
        std::sort(v.rbegin(), v.rend());
        return v;
    };

    // Repair the first pair of terms two apart that still cross, inserting
    // curves after the middle term until no such pair is left. Every
    // insertion replaces the offending count by strictly smaller ones, so
    // the sorted profile of counts drops lexicographically each round.
    for (int guard = 0;; ++guard) {
        size_t j = 0;
        long long m = 0;
        for (size_t i = 1; i + 1 < s.size(); ++i) {
            long long v = eng.geometric(s[i - 1], s[i + 1]);
            if (v > 0) {
                j = i;
                m = v;
                break;
            }
        }
        if (m == 0) break;
        if (guard > 200) throw surgery_stuck("skip repair failed to converge");
        std::vector<long long> before = skip_profile();
        const Word a0 = s[j - 1], a1 = s[j], a2 = s[j + 1];
        bool repaired = false;
        {
            // One curve meeting the middle term once and crossing both
            // neighbors less than they cross each other, flanked by a
            // parallel copy of the middle term.
            CurveQuery q;
            q.pattern = {{a1, 1}};
            q.below = {{a0, m}, {a2, m}};
            q.seeds = surgery_seeds(eng, a2, a0);
            if (auto beta = find_curve(eng, q)) {
                s.insert(s.begin() + j + 1, {*beta, a1});
                repaired = true;
            }
        }
        if (!repaired) {
            // Detour of two curves: the first leaves the neighborhood of
            // the triple and meets both later terms once, the second lives
            // in the far subsurface and meets only the first.
            CurveQuery q1;
            q1.pattern = {{a0, 0}, {a1, 1}, {a2, 1}};
            q1.seeds = surgery_seeds(eng, a2, a1);
            if (auto b1c = find_curve(eng, q1)) {
                CurveQuery q2;
                q2.pattern = {{*b1c, 1}, {a1, 0}, {a2, 0}};
                if (auto b2c = find_curve(eng, q2)) {
                    s.insert(s.begin() + j + 1, {*b1c, *b2c, *b1c});
                    repaired = true;
                }
            }
        }
        if (!repaired)
            throw surgery_stuck("no insertion repairs the crossing pair at term " +
                                std::to_string(j));
        std::vector<long long> after = skip_profile();
        if (!std::lexicographical_compare(after.begin(), after.end(),
                                          before.begin(), before.end()))
            throw surgery_stuck("repair did not decrease the crossing profile");
    }

    CurveSequence out;
    out.profile = SequenceProfile::fact0;
    out.curves = std::move(s);
    return finish(eng, std::move(out));
}

} // namespace convexcalc
