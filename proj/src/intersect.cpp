#include "convexcalc/intersect.h"
#include "convexcalc/errors.h"

#include <algorithm>
#include <map>
#include <set>

namespace convexcalc {

namespace {

std::pair<long long, long long> quantized_key(const Real& ln_neg, const Real& ln_pos) {
    Real scale("1e15");
    Real a = floor(ln_neg * scale + Real("0.5"));
    Real b = floor(ln_pos * scale + Real("0.5"));
    return {a.convert_to<long long>(), b.convert_to<long long>()};
}

} // namespace

const GeodesicData& Intersector::primitive_data(const Word& c) {
    const GeodesicData& g = cache_.get(c);
    if (!g.primitive()) throw precondition_error("curve class must be primitive");
    return g;
}

std::vector<Crossing> Intersector::window_crossings(const GeodesicData& g1,
                                                    const GeodesicData& g2) {
    const Surface& s = cache_.surface();
    int n = s.sides();

    // Tiles met by the second axis, padded by an adjacency ring so crossings
    // that sit on tile boundaries are still caught. Axes hugging a tiling
    // vertex get a deeper ring.
    int depth = (g1.near_vertex && g2.near_vertex) ? s.genus() : 1;
    struct Side2 {
        Word word;
        Mat2 inv;         // inverse of the tile element
        BPoint rep, att;  // axis2 endpoints pulled back by the tile
    };
    std::vector<Side2> side2;
    std::set<Word> seen;
    std::vector<std::pair<Word, Mat2>> frontier;
    for (const TileStep& v : g2.tiles) {
        if (!seen.insert(v.word).second) continue;
        frontier.emplace_back(v.word, v.mat);
    }
    auto add_side = [&](const Word& w, const Mat2& m) {
        Mat2 minv = m.inverse();
        side2.push_back({w, minv, mobius_boundary(minv, g2.end_rep),
                         mobius_boundary(minv, g2.end_att)});
    };
    for (const auto& [w0, m0] : frontier) add_side(w0, m0);
    for (int d = 0; d < depth; ++d) {
        std::vector<std::pair<Word, Mat2>> next;
        for (const auto& [w0, m0] : frontier) {
            for (int e = 0; e < n; ++e) {
                Word w = concat(w0, s.neighbor_word(e));
                free_reduce(w);
                if (!seen.insert(w).second) continue;
                Mat2 m = m0 * s.neighbor_mat(e);
                add_side(w, m);
                next.emplace_back(std::move(w), std::move(m));
            }
        }
        frontier = std::move(next);
    }

    bool same_class = (&g1 == &g2);
    Mat2 frame_inv = g1.frame.inverse();
    Real win_end = g1.win_start + g1.len;
    std::map<std::pair<long long, long long>, Crossing> found;
    for (const TileStep& u : g1.tiles) {
        Mat2 comp = g1.frame * u.mat;
        for (const Side2& v : side2) {
            BPoint p = mobius_boundary(comp, v.rep);
            BPoint q = mobius_boundary(comp, v.att);
            if (p.inf || q.inf) continue;
            Real prod = p.x * q.x;
            if (prod >= 0) continue;
            if (same_class) {
                // Translates lying on the axis itself are not crossings; in
                // frame coordinates they are diagonal or antidiagonal.
                Mat2 h = comp * v.inv * frame_inv;
                Real diag = std::max(abs(h.a), abs(h.d));
                Real offd = std::max(abs(h.b), abs(h.c));
                Real cut("1e-15");
                if (offd < cut * diag || diag < cut * offd) continue;
            }
            Real t = log(-prod) / 2;
            if (t < g1.win_start || t >= win_end) continue;
            // Every window crossing is found with the tile pair holding the
            // crossing point, so out-of-window hits for the same class are
            // rediscoveries; renormalizing them back would amplify rounding
            // by the translation length instead.
            Real ln_neg = log(p.x < 0 ? -p.x : -q.x);
            Real ln_pos = log(p.x < 0 ? q.x : p.x);
            auto key = quantized_key(ln_neg, ln_pos);
            if (found.count(key)) continue;

            // Pull the crossing point back onto the second axis to read off
            // its parameter there.
            Cplx z1(Real(0), exp(t));
            Mat2 back = g2.frame * (comp * v.inv).inverse();
            Cplx zs = mobius(back, z1);
            if (abs(zs.re) > Real("1e-12") * zs.im)
                throw precision_exhausted("crossing drifted off the second axis");
            Real s = log(zs.im);
            Real shift2 = floor((s - g2.win_start) / g2.len);
            s -= shift2 * g2.len;
            long long m = shift2.convert_to<long long>();

            Crossing c;
            c.t = t;
            c.s = s;
            c.sigma = (p.x > 0) ? 1 : -1;
            c.coset = concat(u.word, inverse_word(v.word));
            c.coset = concat(c.coset, word_pow(g2.canon, static_cast<int>(m)));
            free_reduce(c.coset);
            found.emplace(key, std::move(c));
        }
    }
    std::vector<Crossing> out;
    out.reserve(found.size());
    for (auto& kv : found) out.push_back(std::move(kv.second));
    std::sort(out.begin(), out.end(),
              [](const Crossing& a, const Crossing& b) { return a.t < b.t; });
    return out;
}

std::vector<Crossing> Intersector::crossings(const Word& c1, const Word& c2) {
    const GeodesicData& g1 = primitive_data(c1);
    const GeodesicData& g2 = primitive_data(c2);
    Word inv2 = canonical_cyclic(inverse_word(c2), surface().genus());
    if (g1.canon == g2.canon || g1.canon == inv2)
        throw precondition_error("crossing list needs distinct curve classes");
    return window_crossings(g1, g2);
}

long long Intersector::geometric(const Word& c1, const Word& c2) {
    const GeodesicData& g1 = primitive_data(c1);
    const GeodesicData& g2 = primitive_data(c2);
    Word inv2 = canonical_cyclic(inverse_word(c2), surface().genus());
    if (g1.canon == g2.canon || g1.canon == inv2)
        return 2 * self_intersection(c1);
    auto key = std::make_pair(g1.canon, g2.canon);
    auto it = count_memo_.find(key);
    if (it != count_memo_.end()) return it->second;
    long long n = static_cast<long long>(window_crossings(g1, g2).size());
    count_memo_.emplace(std::move(key), n);
    count_memo_.emplace(std::make_pair(g2.canon, g1.canon), n);
    return n;
}

long long Intersector::self_intersection(const Word& c) {
    const GeodesicData& g = primitive_data(c);
    auto key = std::make_pair(g.canon, g.canon);
    auto it = count_memo_.find(key);
    if (it != count_memo_.end()) return it->second;
    auto list = window_crossings(g, g);
    if (list.size() % 2 != 0)
        throw precision_exhausted("self crossing count came out odd");
    long long n = static_cast<long long>(list.size() / 2);
    count_memo_.emplace(std::move(key), n);
    return n;
}

bool Intersector::is_simple(const Word& c) { return self_intersection(c) == 0; }

long long Intersector::signed_sum(const Word& c1, const Word& c2) {
    long long sum = 0;
    for (const Crossing& c : crossings(c1, c2)) sum += c.sigma;
    return sum;
}

} // namespace convexcalc
