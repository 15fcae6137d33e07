#include "convexcalc/surface.h"
#include "convexcalc/errors.h"

namespace convexcalc {

Cplx disk_to_halfplane(const Cplx& d) {
    // Inverse Cayley transform, w -> i(1+w)/(1-w).
    Cplx one_plus{1 + d.re, d.im};
    Cplx one_minus{1 - d.re, -d.im};
    Cplx q = one_plus / one_minus;
    return {-q.im, q.re};
}

namespace {

// Ideal endpoints (u, w) of the geodesic through p and q, with w on the q
// side. Infinite endpoints are flagged.
struct GeoEnds {
    Real u, w;
    bool u_inf = false, w_inf = false;
};

GeoEnds geodesic_ends(const Cplx& p, const Cplx& q, const Real& tol) {
    GeoEnds ends;
    Real dx = p.re - q.re;
    if (abs(dx) < tol * (1 + abs(p.re) + abs(q.re))) {
        // Vertical line.
        if (q.im > p.im) {
            ends.u = p.re;
            ends.w_inf = true;
            ends.w = 0;
        } else {
            ends.w = p.re;
            ends.u_inf = true;
            ends.u = 0;
        }
        return ends;
    }
    Real xc = (abs2(p) - abs2(q)) / (2 * dx);
    Real r = sqrt((p.re - xc) * (p.re - xc) + p.im * p.im);
    Real ang_p = atan2(p.im, p.re - xc);
    Real ang_q = atan2(q.im, q.re - xc);
    if (ang_q < ang_p) {
        ends.u = xc - r;
        ends.w = xc + r;
    } else {
        ends.u = xc + r;
        ends.w = xc - r;
    }
    return ends;
}

} // namespace

Mat2 standard_frame(const Cplx& p, const Cplx& q) {
    Real tol = rep_epsilon();
    GeoEnds ends = geodesic_ends(p, q, tol);
    Mat2 s;
    if (ends.w_inf) {
        s = Mat2(Real(1), -ends.u, Real(0), Real(1));
    } else if (ends.u_inf) {
        s = Mat2(Real(0), Real(-1), Real(1), -ends.w);
    } else if (ends.u < ends.w) {
        s = Mat2(Real(-1), ends.u, Real(1), -ends.w);
    } else {
        s = Mat2(Real(1), -ends.u, Real(1), -ends.w);
    }
    Cplx sp = mobius(s, p);
    if (sp.im <= 0) throw precondition_error("frame map left the half-plane");
    Real root = sqrt(sp.im);
    Mat2 scale(1 / root, Real(0), Real(0), root);
    return normalize_det(scale * s);
}

Mat2 isometry_from_pairs(const Cplx& p, const Cplx& q,
                         const Cplx& p2, const Cplx& q2, const Real& tol) {
    Mat2 t1 = standard_frame(p, q);
    Mat2 t2 = standard_frame(p2, q2);
    Cplx img1 = mobius(t1, q);
    Cplx img2 = mobius(t2, q2);
    if (abs(img1.re) > tol || abs(img2.re) > tol || img1.im <= 1 || img2.im <= 1)
        throw precondition_error("frame map misaligned");
    if (abs(log(img1.im) - log(img2.im)) > tol)
        throw precondition_error("point pairs are not isometric");
    return normalize_det(t2.inverse() * t1);
}

Surface::Surface(int genus) : genus_(genus) {
    init_precision();
    if (genus < 2) throw precondition_error("genus must be at least 2");
    tol_ = rep_epsilon();
    build_vertices();
    solve_generators();
    build_neighbors();
    verify();
}

int Surface::edge_letter(int e) const {
    int t = e / 4, r = e % 4;
    int a = gen_a(t + 1), b = gen_b(t + 1);
    switch (r) {
        case 0: return a;
        case 1: return b;
        case 2: return -a;
        default: return -b;
    }
}

int Surface::edge_partner(int e) const {
    int t = e / 4, r = e % 4;
    return 4 * t + (r + 2) % 4;
}

void Surface::build_vertices() {
    int n = sides();
    // Vertex angle of the regular 4g-gon with angle sum 2 pi:
    // cosh(R) = cot^2(pi / 4g), rho = tanh(R / 2).
    Real pi = pi_value();
    Real t = tan(pi / (4 * genus_));
    Real cosh_r = 1 / (t * t);
    Real r = acosh(cosh_r);
    rho_ = tanh(r / 2);
    verts_disk_.resize(n);
    verts_h_.resize(n);
    for (int k = 0; k < n; ++k) {
        Real ang = vertex_angle(k);
        verts_disk_[k] = Cplx(rho_ * cos(ang), rho_ * sin(ang));
        verts_h_[k] = disk_to_halfplane(verts_disk_[k]);
    }
}

Real Surface::vertex_angle(int k) const {
    return pi_value() * (2 * k + 1) / (4 * genus_);
}

void Surface::solve_generators() {
    int n = sides();
    gen_mats_.assign(2 * genus_, Mat2::identity());
    Mat2 q = Mat2::identity();          // product of solved commutators
    for (int t = 0; t < genus_; ++t) {
        auto v = [&](int k) { return verts_h_[((k % n) + n) % n]; };
        // Pairing across edge 4t+2 carries edge 4t reversed onto it, and the
        // pairing across 4t+3 carries edge 4t+1 reversed onto it.
        Mat2 k_geo = isometry_from_pairs(v(4 * t), v(4 * t + 1),
                                         v(4 * t + 3), v(4 * t + 2), tol_);
        Mat2 l_geo = isometry_from_pairs(v(4 * t + 1), v(4 * t + 2),
                                         v(4 * t + 4), v(4 * t + 3), tol_);
        Mat2 qi = q.inverse();
        Mat2 kk = qi * k_geo * q;        // a b a^-1 in block coordinates
        Mat2 ll = qi * l_geo * q;        // a b a^-1 b^-1 a^-1
        Mat2 rr = ll.inverse() * kk;     // a b
        Mat2 ma = kk.inverse() * rr;
        Mat2 mb = rr.inverse() * kk * rr;
        gen_mats_[2 * t] = normalize_det(ma);
        gen_mats_[2 * t + 1] = normalize_det(mb);
        Mat2 comm = ma * mb * ma.inverse() * mb.inverse();
        q = normalize_det(q * comm);
    }
}

Mat2 Surface::word_mat(const Word& w) const {
    Mat2 m = Mat2::identity();
    for (int x : w) {
        const Mat2& g = gen_mats_[gen_index(x)];
        m = m * (x > 0 ? g : g.inverse());
    }
    return normalize_det(m);
}

void Surface::build_neighbors() {
    int n = sides();
    // Prefixes of the boundary word; the tile across edge e is reached by
    // P_{e+1} P_{partner(e)}^{-1}.
    std::vector<Word> prefixes(n + 1);
    for (int e = 0; e < n; ++e) {
        prefixes[e + 1] = prefixes[e];
        prefixes[e + 1].push_back(edge_letter(e));
    }
    neighbor_words_.resize(n);
    neighbor_mats_.resize(n);
    for (int e = 0; e < n; ++e) {
        Word w = concat(prefixes[e + 1], inverse_word(prefixes[edge_partner(e)]));
        free_reduce(w);
        neighbor_words_[e] = w;
        neighbor_mats_[e] = word_mat(w);
    }
}

void Surface::verify() {
    int n = sides();
    Real tol = tol_ * 1000;
    // All polygon vertices are the orbit of v_0 under the boundary prefixes.
    Word prefix;
    for (int k = 1; k < n; ++k) {
        prefix.push_back(edge_letter(k - 1));
        Cplx img = mobius(word_mat(prefix), verts_h_[0]);
        Cplx want = verts_h_[k];
        if (abs_c(img - want) > tol)
            throw precision_exhausted("side pairing check failed at vertex " +
                                      std::to_string(k));
    }
    Mat2 rel = word_mat(relator(genus_));
    if (!is_identity_proj(rel, tol))
        throw precision_exhausted("boundary relation does not close up");
    // Each neighbor matrix must map the partner edge onto its edge reversed.
    for (int e = 0; e < n; ++e) {
        int p = edge_partner(e);
        Cplx i0 = mobius(neighbor_mats_[e], verts_h_[p]);
        Cplx i1 = mobius(neighbor_mats_[e], verts_h_[(p + 1) % n]);
        Cplx w0 = verts_h_[(e + 1) % n];
        Cplx w1 = verts_h_[e];
        if (abs_c(i0 - w0) > tol || abs_c(i1 - w1) > tol)
            throw precision_exhausted("edge pairing check failed at edge " +
                                      std::to_string(e));
    }
}

} // namespace convexcalc
