#include "oracle_polyline.h"

#include "convexcalc/errors.h"
#include "convexcalc/homology.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace convexcalc {
namespace oracle {
namespace {

// Distance along the geodesic frame and interpolation between two points.
Real pair_distance(const Cplx& p, const Cplx& q, Mat2* frame_out = nullptr) {
    Mat2 f = standard_frame(p, q);
    Cplx qq = mobius(f, q);
    if (frame_out) *frame_out = f;
    return log(qq.im);
}

Cplx interpolate(const Cplx& p, const Cplx& q, const Real& s) {
    Mat2 f;
    Real d = pair_distance(p, q, &f);
    return mobius(f.inverse(), Cplx(Real(0), exp(d * s)));
}

Cplx midpoint(const Cplx& p, const Cplx& q) {
    return interpolate(p, q, Real(1) / 2);
}

Real move_size(const Cplx& p, const Cplx& q) {
    return abs_c(p - q) / p.im;
}

// Relax each vertex toward the midpoint of its neighbours until the polyline
// settles on the invariant geodesic of the deck word. The wrap-around uses
// the deck matrix so the closed curve stays deck-equivariant.
void straighten(std::vector<Cplx>& pts, const Mat2& deck) {
    const Mat2 deck_inv = deck.inverse();
    const Real tol("1e-13");
    const int n = static_cast<int>(pts.size());
    if (n < 2) {
        // Single vertex: the fixed point condition puts it on the axis at the
        // midpoint of (deck^-1 p, deck p).
        for (int it = 0; it < 4000; ++it) {
            Cplx target = midpoint(mobius(deck_inv, pts[0]), mobius(deck, pts[0]));
            Real mv = move_size(pts[0], target);
            pts[0] = target;
            if (mv < tol) return;
        }
        throw std::runtime_error("polyline flow did not settle");
    }
    for (int sweep = 0; sweep < 60000; ++sweep) {
        Real worst(0);
        for (int k = 0; k < n; ++k) {
            Cplx prev = (k == 0) ? mobius(deck_inv, pts[n - 1]) : pts[k - 1];
            Cplx next = (k == n - 1) ? mobius(deck, pts[0]) : pts[k + 1];
            Cplx target = midpoint(prev, next);
            Real mv = move_size(pts[k], target);
            if (mv > worst) worst = mv;
            pts[k] = target;
        }
        if (worst < tol) return;
    }
    throw std::runtime_error("polyline flow did not settle");
}

void subdivide(std::vector<Cplx>& pts, const Mat2& deck, const Real& max_len) {
    std::vector<Cplx> out;
    const int n = static_cast<int>(pts.size());
    for (int k = 0; k < n; ++k) {
        const Cplx& p = pts[k];
        Cplx q = (k == n - 1) ? mobius(deck, pts[0]) : pts[k + 1];
        Real d = pair_distance(p, q);
        int pieces = 1;
        if (d > max_len) pieces = static_cast<int>(static_cast<double>(d / max_len)) + 1;
        out.push_back(p);
        for (int j = 1; j < pieces; ++j)
            out.push_back(interpolate(p, q, Real(j) / pieces));
    }
    pts = std::move(out);
}

Mat2 max_normalized(const Mat2& m) {
    Real mx = abs(m.a);
    if (abs(m.b) > mx) mx = abs(m.b);
    if (abs(m.c) > mx) mx = abs(m.c);
    if (abs(m.d) > mx) mx = abs(m.d);
    return Mat2(m.a / mx, m.b / mx, m.c / mx, m.d / mx);
}

int side_sign(const Real& v) { return (v > 0) ? 1 : ((v < 0) ? -1 : 0); }

// Side of the point x relative to the complete geodesic through c and d.
int geodesic_side(const Cplx& c, const Cplx& d, const Cplx& x) {
    Real dx = d.re - c.re;
    Real scale = abs(c.re) + abs(d.re) + c.im + d.im + 1;
    if (abs(dx) < scale * Real("1e-40")) return side_sign(x.re - c.re);
    Real m = (abs2(d) - abs2(c)) / (2 * dx);
    Real cm = c.re - m;
    Real xm = x.re - m;
    return side_sign(xm * xm + x.im * x.im - (cm * cm + c.im * c.im));
}

// A zero side (crossing exactly at a polyline vertex) counts as +1, which
// makes each segment half-open at its start and attributes such a crossing
// to exactly one segment pair.
int tie_plus(int s) { return s == 0 ? 1 : s; }

bool segments_cross(const Cplx& a, const Cplx& b, const Cplx& c, const Cplx& d) {
    int s1 = tie_plus(geodesic_side(c, d, a)) * tie_plus(geodesic_side(c, d, b));
    if (s1 >= 0) return false;
    int s2 = tie_plus(geodesic_side(a, b, c)) * tie_plus(geodesic_side(a, b, d));
    return s2 < 0;
}

struct SegBox {
    double xlo, xhi, ylo, yhi;
    bool overlaps(const SegBox& o) const {
        return xlo <= o.xhi && o.xlo <= xhi && ylo <= o.yhi && o.ylo <= yhi;
    }
};

SegBox segment_box(const Cplx& p, const Cplx& q) {
    double px = static_cast<double>(p.re), py = static_cast<double>(p.im);
    double qx = static_cast<double>(q.re), qy = static_cast<double>(q.im);
    SegBox b;
    b.xlo = std::min(px, qx);
    b.xhi = std::max(px, qx);
    b.ylo = std::min(py, qy);
    b.yhi = std::max(py, qy);
    if (std::abs(qx - px) > 1e-300) {
        // Arc of a circle centred on the real axis; include the apex when the
        // top of the circle lies between the endpoints.
        double m = (qx * qx + qy * qy - px * px - py * py) / (2 * (qx - px));
        if ((px - m) * (qx - m) < 0) {
            double r = std::sqrt((px - m) * (px - m) + py * py);
            b.yhi = std::max(b.yhi, r);
        }
    }
    double pad = 1e-9 * (1 + std::abs(b.xhi) + std::abs(b.xlo) + b.yhi);
    b.xlo -= pad;
    b.xhi += pad;
    b.ylo -= pad;
    b.yhi += pad;
    return b;
}

struct Footprint {
    std::vector<Word> core, padded;
};

Real hyper_dist(const Cplx& p, const Cplx& q) {
    Real num = abs2(p - q);
    Real arg = 1 + num / (2 * p.im * q.im);
    return acosh(arg);
}

// All tiles around the vertex mobius(M(tile), base vertex k), found by
// walking across the two edges incident to the vertex.
void add_vertex_star(const Surface& s, const Word& tile, int k,
                     std::set<Word>& out) {
    const int n = s.sides();
    Mat2 tm = s.word_mat(tile);
    Cplx v = mobius(tm, s.vertex_h(k));
    Word cur = tile;
    Mat2 cm = tm;
    // Vertex k sits between edges k-1 and k; walk around it one tile at a
    // time, always leaving through the incident edge we did not come from.
    int edge = k;
    for (int step = 0; step < n + 2; ++step) {
        Word nxt = concat(cur, s.neighbor_word(edge));
        free_reduce(nxt);
        if (nxt == tile) break;
        Mat2 nm = cm * s.neighbor_mat(edge);
        out.insert(nxt);
        int j = -1;
        for (int t = 0; t < n; ++t) {
            if (hyper_dist(mobius(nm, s.vertex_h(t)), v) < Real("1e-8")) {
                j = t;
                break;
            }
        }
        if (j < 0) break;
        int came = s.edge_partner(edge);
        edge = (came == j) ? (j + n - 1) % n : j;
        cur = nxt;
        cm = nm;
    }
}

Footprint footprint(const Surface& s, GeodesicCache& cache,
                    const std::vector<Cplx>& pts, const Mat2& deck) {
    std::set<Word> core;
    std::map<Word, Mat2> mats;
    const int n = static_cast<int>(pts.size());
    const Real near_vertex("0.25");
    auto visit = [&](const Word& tile, const Cplx& z) {
        core.insert(tile);
        auto it = mats.find(tile);
        if (it == mats.end()) it = mats.emplace(tile, s.word_mat(tile)).first;
        for (int k = 0; k < s.sides(); ++k) {
            if (hyper_dist(mobius(it->second, s.vertex_h(k)), z) < near_vertex)
                add_vertex_star(s, tile, k, core);
        }
    };
    Word cur = cache.locate_tile(pts[0]);
    visit(cur, pts[0]);
    for (int k = 0; k < n; ++k) {
        const Cplx& p = pts[k];
        Cplx q = (k == n - 1) ? mobius(deck, pts[0]) : pts[k + 1];
        Real d = pair_distance(p, q);
        int samples = static_cast<int>(static_cast<double>(d) / 0.1) + 1;
        for (int j = 1; j <= samples; ++j) {
            Cplx z = interpolate(p, q, Real(j) / samples);
            cur = cache.locate_tile(z, cur);
            visit(cur, z);
        }
    }
    std::set<Word> padded = core;
    for (const Word& t : core) {
        for (int e = 0; e < s.sides(); ++e) {
            Word nb = concat(t, s.neighbor_word(e));
            free_reduce(nb);
            padded.insert(nb);
        }
    }
    Footprint f;
    f.core.assign(core.begin(), core.end());
    f.padded.assign(padded.begin(), padded.end());
    return f;
}

struct Lift {
    std::vector<Cplx> pts; // n + 1 points, closing endpoint included
    std::vector<SegBox> boxes;
    SegBox total;
};

Lift make_lift(const Mat2& h, const PolyCurve& c) {
    Lift l;
    const int n = static_cast<int>(c.pts.size());
    l.pts.reserve(n + 1);
    for (const Cplx& p : c.pts) l.pts.push_back(mobius(h, p));
    l.pts.push_back(mobius(h * c.deck, c.pts[0]));
    l.boxes.reserve(n);
    l.total = segment_box(l.pts[0], l.pts[1]);
    for (int i = 0; i < n; ++i) {
        l.boxes.push_back(segment_box(l.pts[i], l.pts[i + 1]));
        l.total.xlo = std::min(l.total.xlo, l.boxes.back().xlo);
        l.total.xhi = std::max(l.total.xhi, l.boxes.back().xhi);
        l.total.ylo = std::min(l.total.ylo, l.boxes.back().ylo);
        l.total.yhi = std::max(l.total.yhi, l.boxes.back().yhi);
    }
    return l;
}

// Meeting point of the complete geodesics through the two segments.
Cplx crossing_point(const Cplx& a, const Cplx& b, const Cplx& c, const Cplx& d) {
    auto circle = [](const Cplx& p, const Cplx& q, bool& vertical, Real& m, Real& r2) {
        Real dx = q.re - p.re;
        Real scale = abs(p.re) + abs(q.re) + p.im + q.im + 1;
        vertical = abs(dx) < scale * Real("1e-40");
        if (vertical) {
            m = p.re;
            r2 = 0;
            return;
        }
        m = (abs2(q) - abs2(p)) / (2 * dx);
        r2 = (p.re - m) * (p.re - m) + p.im * p.im;
    };
    bool v1, v2;
    Real m1, r1, m2, r2;
    circle(a, b, v1, m1, r1);
    circle(c, d, v2, m2, r2);
    if (v1 && v2) return Cplx(m1, Real(1));
    Real x;
    if (v1) x = m1;
    else if (v2) x = m2;
    else x = (r1 - r2 - m1 * m1 + m2 * m2) / (2 * (m2 - m1));
    Real y2 = v1 ? (r2 - (x - m2) * (x - m2)) : (r1 - (x - m1) * (x - m1));
    if (y2 < 0) y2 = 0;
    return Cplx(x, sqrt(y2));
}

long long count_crossings(const Lift& one, const Lift& two, std::vector<Cplx>* out) {
    if (!one.total.overlaps(two.total)) return 0;
    long long total = 0;
    const int n1 = static_cast<int>(one.boxes.size());
    const int n2 = static_cast<int>(two.boxes.size());
    for (int i = 0; i < n1; ++i) {
        if (!one.boxes[i].overlaps(two.total)) continue;
        for (int j = 0; j < n2; ++j) {
            if (!one.boxes[i].overlaps(two.boxes[j])) continue;
            if (segments_cross(one.pts[i], one.pts[i + 1], two.pts[j], two.pts[j + 1])) {
                ++total;
                if (out)
                    out->push_back(crossing_point(one.pts[i], one.pts[i + 1],
                                                  two.pts[j], two.pts[j + 1]));
            }
        }
    }
    return total;
}

struct Candidate {
    Word word;
    Mat2 mat;
};

// All candidate translates h = M(T) M(V)^-1 over the two footprints.
// Deduplication is exact: candidates are bucketed by homology class and a
// matrix near-match is confirmed with the word problem, so far-away
// translates whose matrices nearly coincide are still kept apart.
std::vector<Candidate> candidate_translates(const Surface& s,
                                            const PolyCurve& one,
                                            const PolyCurve& two) {
    const int genus = s.genus();
    std::vector<std::pair<Word, Mat2>> tmats, vmats;
    for (const Word& t : one.tiles) tmats.emplace_back(t, s.word_mat(t));
    for (const Word& v : two.tiles_core) {
        Word vi = inverse_word(v);
        vmats.emplace_back(vi, s.word_mat(v).inverse());
    }
    std::vector<Candidate> out;
    std::map<HVec, std::vector<size_t>> buckets;
    const Real near("1e-15");
    for (const auto& [tw, tm] : tmats) {
        for (const auto& [vw, vm] : vmats) {
            Word hw = concat(tw, vw);
            free_reduce(hw);
            Mat2 hm = tm * vm;
            HVec hcls = homology_class(hw, genus);
            auto& bucket = buckets[hcls];
            Mat2 hn = max_normalized(hm);
            bool dup = false;
            for (size_t idx : bucket) {
                if (proj_dist(hn, max_normalized(out[idx].mat)) < near &&
                    equal_elements(hw, out[idx].word, genus)) {
                    dup = true;
                    break;
                }
            }
            if (dup) continue;
            bucket.push_back(out.size());
            out.push_back({std::move(hw), hm});
        }
    }
    return out;
}

} // namespace

PolyCurve make_poly(const Surface& s, GeodesicCache& cache, const Word& w) {
    Word cw = cyclic_reduce(dehn_reduce(w, s.genus()));
    if (cw.empty()) throw precondition_error("polyline oracle needs a nontrivial word");
    PolyCurve c;
    c.word = cw;
    c.deck = s.word_mat(cw);
    Cplx o(Real(0), Real(1));
    std::vector<Cplx> pts;
    Mat2 prefix = Mat2::identity();
    for (size_t k = 0; k < cw.size(); ++k) {
        pts.push_back(mobius(prefix, o));
        int x = cw[k];
        Mat2 g = s.generator_mat(gen_index(x));
        prefix = (x > 0) ? prefix * g : prefix * g.inverse();
    }
    straighten(pts, c.deck);
    subdivide(pts, c.deck, Real("0.12"));
    c.pts = std::move(pts);
    Footprint f = footprint(s, cache, c.pts, c.deck);
    c.tiles_core = std::move(f.core);
    c.tiles = std::move(f.padded);
    return c;
}

long long poly_geometric(const Surface& s, const PolyCurve& pa, const PolyCurve& pb,
                         std::vector<Cplx>* out) {
    Lift base = make_lift(Mat2::identity(), pa);
    long long total = 0;
    for (const Candidate& cand : candidate_translates(s, pa, pb))
        total += count_crossings(base, make_lift(cand.mat, pb), out);
    return total;
}

long long poly_self(const Surface& s, const PolyCurve& p, std::vector<Cplx>* out) {
    Lift base = make_lift(Mat2::identity(), p);
    const Mat2& c = p.deck;
    const Mat2 cinv = c.inverse();
    const Real tol("1e-20");
    long long total = 0;
    for (const Candidate& cand : candidate_translates(s, p, p)) {
        // Skip the stabiliser of the invariant geodesic: elements commuting
        // with the deck word or inverting it share its axis and contribute
        // only parallel lifts.
        Mat2 conj = cand.mat * c * cand.mat.inverse();
        if (proj_dist(conj, c) < tol || proj_dist(conj, cinv) < tol) continue;
        total += count_crossings(base, make_lift(cand.mat, p), out);
    }
    if (total % 2 != 0)
        throw std::runtime_error("polyline self crossing count came out odd");
    return total / 2;
}

long long poly_geometric(const Surface& s, GeodesicCache& cache,
                         const Word& a, const Word& b) {
    PolyCurve pa = make_poly(s, cache, a);
    PolyCurve pb = make_poly(s, cache, b);
    return poly_geometric(s, pa, pb);
}

long long poly_self(const Surface& s, GeodesicCache& cache, const Word& a) {
    PolyCurve p = make_poly(s, cache, a);
    return poly_self(s, p);
}

} // namespace oracle
} // namespace convexcalc
