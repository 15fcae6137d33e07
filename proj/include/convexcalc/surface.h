#pragma once

#include "convexcalc/numeric.h"
#include "convexcalc/words.h"

#include <vector>

namespace convexcalc {

// Hyperbolic structure on the closed genus-g surface, realized on a regular
// 4g-gon with the standard identification a1 b1 a1' b1' ... read around the
// boundary. Matrices act on the upper half-plane; the unit disk picture is
// kept alongside for drawing and arrangement work.
class Surface {
public:
    explicit Surface(int genus);

    int genus() const { return genus_; }
    int sides() const { return 4 * genus_; }

    // Letter of the boundary word on edge e (edge e runs v_e -> v_{e+1}).
    int edge_letter(int e) const;
    // Partner edge glued to e.
    int edge_partner(int e) const;

    // Group element whose tile is adjacent to the base tile across edge e.
    const Word& neighbor_word(int e) const { return neighbor_words_[e]; }
    const Mat2& neighbor_mat(int e) const { return neighbor_mats_[e]; }

    const Mat2& generator_mat(int gen) const { return gen_mats_[gen]; }
    Mat2 word_mat(const Word& w) const;

    // Polygon vertices.
    const Cplx& vertex_h(int k) const { return verts_h_[k]; }
    const Cplx& vertex_disk(int k) const { return verts_disk_[k]; }

    // Disk angle of vertex k and Euclidean radius of the vertex circle.
    Real vertex_angle(int k) const;
    const Real& vertex_radius() const { return rho_; }

    const Real& tolerance() const { return tol_; }

private:
    void build_vertices();
    void solve_generators();
    void build_neighbors();
    void verify();

    int genus_;
    Real rho_;
    Real tol_;
    std::vector<Cplx> verts_disk_, verts_h_;
    std::vector<Mat2> gen_mats_;
    std::vector<Word> neighbor_words_;
    std::vector<Mat2> neighbor_mats_;
};

// Unique orientation-preserving isometry taking the ordered pair (p, q) to
// (p2, q2); the hyperbolic distances must agree within tol.
Mat2 isometry_from_pairs(const Cplx& p, const Cplx& q,
                         const Cplx& p2, const Cplx& q2, const Real& tol);

// Maps p to i and q to exp(d(p,q)) i on the imaginary axis.
Mat2 standard_frame(const Cplx& p, const Cplx& q);

Cplx disk_to_halfplane(const Cplx& d);

} // namespace convexcalc
