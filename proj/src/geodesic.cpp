#include "convexcalc/geodesic.h"
#include "convexcalc/errors.h"

namespace convexcalc {

BPoint mobius_boundary(const Mat2& m, const BPoint& p) {
    if (p.inf) {
        if (m.c == 0) return BPoint(Real(0), true);
        return BPoint(m.a / m.c);
    }
    Real den = m.c * p.x + m.d;
    if (den == 0) return BPoint(Real(0), true);
    return BPoint((m.a * p.x + m.b) / den);
}

BoundaryPair geodesic_boundary(const Cplx& p, const Cplx& q) {
    BoundaryPair out;
    Real tol = rep_epsilon();
    Real dx = p.re - q.re;
    if (abs(dx) < tol * (1 + abs(p.re) + abs(q.re))) {
        if (q.im > p.im) {
            out.u = BPoint(p.re);
            out.w = BPoint(Real(0), true);
        } else {
            out.u = BPoint(Real(0), true);
            out.w = BPoint(p.re);
        }
        return out;
    }
    Real xc = (abs2(p) - abs2(q)) / (2 * dx);
    Real r = sqrt((p.re - xc) * (p.re - xc) + p.im * p.im);
    Real ang_p = atan2(p.im, p.re - xc);
    Real ang_q = atan2(q.im, q.re - xc);
    if (ang_q < ang_p) {
        out.u = BPoint(xc - r);
        out.w = BPoint(xc + r);
    } else {
        out.u = BPoint(xc + r);
        out.w = BPoint(xc - r);
    }
    return out;
}

Cplx GeodesicData::axis_point(const Real& t) const {
    return mobius(frame.inverse(), Cplx(Real(0), exp(t)));
}

GeodesicCache::GeodesicCache(const Surface& s) : surf_(s) {
    int n = s.sides();
    edge_bounds_.resize(n);
    edge_center_.resize(n);
    edge_rad2_.resize(n);
    edge_sign_.resize(n);
    Cplx center{Real(0), Real(1)};
    for (int e = 0; e < n; ++e) {
        edge_bounds_[e] = geodesic_boundary(s.vertex_h(e), s.vertex_h((e + 1) % n));
        const BoundaryPair& bp = edge_bounds_[e];
        if (bp.u.inf || bp.w.inf)
            throw precision_exhausted("polygon side through infinity");
        edge_center_[e] = (bp.u.x + bp.w.x) / 2;
        Real r = abs(bp.w.x - bp.u.x) / 2;
        edge_rad2_[e] = r * r;
        Real val = (center.re - edge_center_[e]) * (center.re - edge_center_[e]) +
                   center.im * center.im - edge_rad2_[e];
        edge_sign_[e] = val > 0 ? 1 : -1;
    }
}

bool GeodesicCache::inside_base(const Cplx& z, const Real& slack) const {
    for (size_t e = 0; e < edge_center_.size(); ++e) {
        Real val = (z.re - edge_center_[e]) * (z.re - edge_center_[e]) +
                   z.im * z.im - edge_rad2_[e];
        if (val * edge_sign_[e] < -slack) return false;
    }
    return true;
}

int GeodesicCache::most_violated_edge(const Cplx& z) const {
    int worst = -1;
    Real worst_val(0);
    for (size_t e = 0; e < edge_center_.size(); ++e) {
        Real val = ((z.re - edge_center_[e]) * (z.re - edge_center_[e]) +
                    z.im * z.im - edge_rad2_[e]) *
                   edge_sign_[e];
        if (val < worst_val) {
            worst_val = val;
            worst = static_cast<int>(e);
        }
    }
    return worst;
}

Word GeodesicCache::locate_tile(const Cplx& z, Word start) const {
    Word u = std::move(start);
    Mat2 inv = surf_.word_mat(u).inverse();
    Cplx local = mobius(inv, z);
    Real slack = rep_epsilon() * rep_epsilon();
    for (int iter = 0; iter < 100000; ++iter) {
        if (inside_base(local, slack)) {
            free_reduce(u);
            return u;
        }
        int e = most_violated_edge(local);
        const Word& step = surf_.neighbor_word(e);
        u.insert(u.end(), step.begin(), step.end());
        local = mobius(surf_.neighbor_mat(surf_.edge_partner(e)), local);
    }
    throw precision_exhausted("tile walk did not settle");
}

const GeodesicData& GeodesicCache::get(const Word& w) {
    Word canon = canonical_cyclic(w, surf_.genus());
    if (canon.empty()) throw precondition_error("curve class is trivial");
    auto it = cache_.find(canon);
    if (it != cache_.end()) return *it->second;
    auto data = std::make_unique<GeodesicData>();
    data->canon = canon;
    data->period = cyclic_period(canon);
    build(*data);
    auto res = cache_.emplace(canon, std::move(data));
    return *res.first->second;
}

void GeodesicCache::build(GeodesicData& g) const {
    g.mat = surf_.word_mat(g.canon);
    g.len = translation_length(g.mat);
    AxisEnds ends = axis_ends(g.mat);
    g.end_rep = BPoint(ends.repelling, ends.rep_inf);
    g.end_att = BPoint(ends.attracting, ends.att_inf);
    // Frame sending repelling end to 0, attracting end to infinity.
    if (g.end_att.inf) {
        g.frame = Mat2(Real(1), -g.end_rep.x, Real(0), Real(1));
    } else if (g.end_rep.inf) {
        g.frame = Mat2(Real(0), Real(-1), Real(1), -g.end_att.x);
    } else if (g.end_rep.x < g.end_att.x) {
        g.frame = Mat2(Real(-1), g.end_rep.x, Real(1), -g.end_att.x);
    } else {
        g.frame = Mat2(Real(1), -g.end_rep.x, Real(1), -g.end_att.x);
    }
    g.frame = normalize_det(g.frame);
    // Deterministic window start away from tile-boundary coincidences.
    g.win_start = g.len * Real("0.3819660112501051517954131656343619");
    Real win_end = g.win_start + g.len;

    Cplx z0 = g.axis_point(g.win_start);
    Word seed = locate_tile(z0);

    TileStep first;
    first.word = seed;
    first.mat = surf_.word_mat(seed);
    first.entry = g.win_start;
    first.entry_edge = -1;
    first.exit_edge = -1;
    g.tiles.push_back(first);

    Real gap("1e-25");
    Real tie_eps("1e-18");
    int n = surf_.sides();
    Real lower_bound = g.win_start - gap;
    for (int iter = 0; iter < 100000; ++iter) {
        TileStep& cur = g.tiles.back();
        Mat2 comp = g.frame * cur.mat;
        int best_e = -1;
        Real best_t(0), second_t(0);
        bool have_second = false;
        for (int e = 0; e < n; ++e) {
            if (e == cur.entry_edge) continue;
            BPoint p = mobius_boundary(comp, edge_bound(e).u);
            BPoint q = mobius_boundary(comp, edge_bound(e).w);
            if (p.inf || q.inf) continue;
            Real prod = p.x * q.x;
            if (prod >= 0) continue;
            Real t = log(-prod) / 2;
            if (t <= lower_bound) continue;
            if (best_e < 0 || t < best_t) {
                if (best_e >= 0) {
                    second_t = best_t;
                    have_second = true;
                }
                best_e = e;
                best_t = t;
            } else if (!have_second || t < second_t) {
                second_t = t;
                have_second = true;
            }
        }
        if (best_e < 0) throw precision_exhausted("axis marching lost the polygon");
        cur.exit_edge = best_e;
        bool tie = have_second && (second_t - best_t < tie_eps);
        if (tie || best_t - cur.entry < Real("1e-10")) g.near_vertex = true;
        if (best_t >= win_end) {
            // The tile holding the window end must be the holonomy image of
            // the seed tile. With a vertex sitting exactly there the match is
            // checked against a point just past the end instead.
            Mat2 expect = normalize_det(g.mat * g.tiles.front().mat);
            Real scale = std::max(
                Real(1), std::max(std::max(abs(expect.a), abs(expect.b)),
                                  std::max(abs(expect.c), abs(expect.d))));
            Real tol = Real("1e-15") * scale;
            if (proj_dist(normalize_det(cur.mat), expect) <= tol) return;
            if (tie) {
                Word across = locate_tile(g.axis_point(win_end + Real("1e-9")), cur.word);
                if (proj_dist(normalize_det(surf_.word_mat(across)), expect) <= tol)
                    return;
            }
            throw precision_exhausted("axis march failed to close up");
        }
        TileStep next;
        if (tie) {
            // The axis runs through a tiling vertex; continue in the tile
            // just past it.
            next.word = locate_tile(g.axis_point(best_t + Real("1e-9")), cur.word);
            next.mat = surf_.word_mat(next.word);
            next.entry = best_t;
            next.entry_edge = -1;
            lower_bound = best_t + tie_eps;
        } else {
            next.word = concat(cur.word, surf_.neighbor_word(best_e));
            free_reduce(next.word);
            next.mat = cur.mat * surf_.neighbor_mat(best_e);
            next.entry = best_t;
            next.entry_edge = surf_.edge_partner(best_e);
            lower_bound = best_t - gap;
        }
        next.exit_edge = -1;
        g.tiles.push_back(next);
    }
    throw precision_exhausted("axis march did not terminate");
}

} // namespace convexcalc
