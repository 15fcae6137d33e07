#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace convexcalc {

// Working precision is dynamic (CONVEXCALC_PRECISION env var, bits; default 120).
using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<0, boost::multiprecision::allocate_dynamic>,
    boost::multiprecision::et_off>;

// Call once before constructing any Real. Returns the precision in bits.
unsigned init_precision();
unsigned current_precision();

// Representation tolerance used by the matrix checks.
Real rep_epsilon();

Real pi_value();

struct Cplx {
    Real re, im;
    Cplx() : re(0), im(0) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
};

Cplx operator+(const Cplx& x, const Cplx& y);
Cplx operator-(const Cplx& x, const Cplx& y);
Cplx operator*(const Cplx& x, const Cplx& y);
Cplx operator/(const Cplx& x, const Cplx& y);
Real abs2(const Cplx& x);
Real abs_c(const Cplx& x);

// Real 2x2 matrix acting on the upper half-plane by Mobius transformation.
struct Mat2 {
    Real a, b, c, d;
    Mat2() : a(1), b(0), c(0), d(1) {}
    Mat2(Real a_, Real b_, Real c_, Real d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static Mat2 identity();
    Mat2 operator*(const Mat2& o) const;
    Mat2 inverse() const;
    Real det() const;
    Real trace() const;
};

// Scale to det 1; requires positive determinant.
Mat2 normalize_det(const Mat2& m);

// Distance between matrices after aligning the projective sign.
Real proj_dist(const Mat2& m, const Mat2& n);

bool is_identity_proj(const Mat2& m, const Real& tol);

// Mobius action on the upper half-plane.
Cplx mobius(const Mat2& m, const Cplx& z);

// Action on the boundary circle R u {inf}, reported as the angle
// theta(x) = atan2(-2x, x^2 - 1), theta(inf) = 0, in (-pi, pi].
Real boundary_angle(const Real& x);
Real boundary_angle_inf();

// Fixed points on the boundary of a hyperbolic matrix, attracting second.
// Values are in R u {inf}; inf is signalled via the bool flags.
struct AxisEnds {
    Real repelling, attracting;
    bool rep_inf = false, att_inf = false;
};
AxisEnds axis_ends(const Mat2& m);

// Translation length 2*acosh(|tr|/2) of a hyperbolic det-1 matrix.
Real translation_length(const Mat2& m);

// Cayley transform to the unit disk, z -> (z - i)/(z + i).
Cplx to_disk(const Cplx& z);
Cplx boundary_point_disk(const Real& x, bool at_inf);

std::string real_to_string(const Real& x, int digits = 17);

} // namespace convexcalc
