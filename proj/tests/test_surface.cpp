#include "doctest.h"

#include "convexcalc/surface.h"
#include "convexcalc/errors.h"

using namespace convexcalc;

namespace {
const Surface& surf(int g) {
    static Surface s2(2), s3(3), s4(4);
    switch (g) {
        case 2: return s2;
        case 3: return s3;
        default: return s4;
    }
}
} // namespace

TEST_CASE("construction verifies pairings for genus 2 to 4") {
    for (int g : {2, 3, 4}) {
        const Surface& s = surf(g);
        CHECK(s.sides() == 4 * g);
        Mat2 rel = s.word_mat(relator(g));
        CHECK(is_identity_proj(rel, rep_epsilon() * 1000));
    }
    CHECK_THROWS_AS(Surface(1), precondition_error);
}

TEST_CASE("generators are hyperbolic with positive translation length") {
    const Surface& s = surf(2);
    for (int gidx = 0; gidx < 4; ++gidx) {
        const Mat2& m = s.generator_mat(gidx);
        CHECK(abs(m.det() - 1) < 1e-18);
        CHECK(abs(m.trace()) > 2);
        CHECK(translation_length(m) > 0);
    }
}

TEST_CASE("neighbor relations") {
    for (int g : {2, 3}) {
        const Surface& s = surf(g);
        for (int e = 0; e < s.sides(); ++e) {
            int p = s.edge_partner(e);
            CHECK(s.edge_partner(p) == e);
            CHECK(s.edge_letter(p) == -s.edge_letter(e));
            // Crossing an edge and then its partner returns home.
            Word round = concat(s.neighbor_word(e), s.neighbor_word(p));
            CHECK(is_trivial(round, g));
        }
    }
}

TEST_CASE("axis endpoints land on the boundary consistently") {
    const Surface& s = surf(2);
    Mat2 a1 = s.generator_mat(0);
    AxisEnds ends = axis_ends(a1);
    // Applying the matrix to a point near the repelling end moves it toward
    // the attracting end.
    Cplx z{ends.rep_inf ? Real(1000) : ends.repelling, Real("0.001")};
    Cplx moved = mobius(a1, z);
    for (int k = 0; k < 20; ++k) moved = mobius(a1, moved);
    Real target = ends.att_inf ? Real(0) : ends.attracting;
    if (!ends.att_inf)
        CHECK(abs(moved.re - target) < Real("0.01"));
    else
        CHECK(abs(moved.re) > 100);
}

TEST_CASE("boundary angles") {
    Real pi = pi_value();
    CHECK(abs(boundary_angle(Real(0)) - pi) < 1e-25);
    CHECK(abs(boundary_angle_inf()) < 1e-25);
    CHECK(abs(boundary_angle(Real(1)) + pi / 2) < 1e-25);
    CHECK(abs(boundary_angle(Real(-1)) - pi / 2) < 1e-25);
    // Disk embedding agrees with the angle map.
    Real x("2.5");
    Cplx d = boundary_point_disk(x, false);
    CHECK(abs(atan2(d.im, d.re) - boundary_angle(x)) < 1e-25);
    CHECK(abs(abs2(d) - 1) < 1e-25);
}

TEST_CASE("isometry solve recovers a known motion") {
    Cplx p{Real("0.3"), Real("1.2")}, q{Real("-0.7"), Real("2.0")};
    Mat2 g = normalize_det(Mat2(Real(3), Real(1), Real(1), Real(1)));
    Cplx p2 = mobius(g, p), q2 = mobius(g, q);
    Mat2 m = isometry_from_pairs(p, q, p2, q2, rep_epsilon() * 10);
    CHECK(proj_dist(m, g) < 1e-20);
    CHECK(abs_c(mobius(m, p) - p2) < 1e-20);
    CHECK(abs_c(mobius(m, q) - q2) < 1e-20);
}
