#include "convexcalc/numeric.h"
#include "convexcalc/errors.h"

#include <cstdlib>
#include <sstream>
#include <iomanip>

namespace convexcalc {

namespace {
unsigned g_bits = 0;
}

unsigned init_precision() {
    if (g_bits) return g_bits;
    unsigned bits = 120;
    if (const char* env = std::getenv("CONVEXCALC_PRECISION")) {
        long v = std::atol(env);
        if (v >= 24 && v <= 100000) bits = static_cast<unsigned>(v);
    }
    unsigned digits10 = static_cast<unsigned>(bits * 0.30103) + 1;
    Real::default_precision(digits10);
    g_bits = bits;
    return bits;
}

unsigned current_precision() { return init_precision(); }

Real rep_epsilon() {
    init_precision();
    return Real("1e-20");
}

Real pi_value() {
    init_precision();
    static const Real pi = 4 * atan(Real(1));
    return pi;
}

Cplx operator+(const Cplx& x, const Cplx& y) { return {x.re + y.re, x.im + y.im}; }
Cplx operator-(const Cplx& x, const Cplx& y) { return {x.re - y.re, x.im - y.im}; }

Cplx operator*(const Cplx& x, const Cplx& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

Cplx operator/(const Cplx& x, const Cplx& y) {
    Real d = y.re * y.re + y.im * y.im;
    return {(x.re * y.re + x.im * y.im) / d, (x.im * y.re - x.re * y.im) / d};
}

Real abs2(const Cplx& x) { return x.re * x.re + x.im * x.im; }
Real abs_c(const Cplx& x) { return sqrt(abs2(x)); }

Mat2 Mat2::identity() { return Mat2(); }

Mat2 Mat2::operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2 Mat2::inverse() const {
    Real dt = det();
    return {d / dt, -b / dt, -c / dt, a / dt};
}

Real Mat2::det() const { return a * d - b * c; }
Real Mat2::trace() const { return a + d; }

Mat2 normalize_det(const Mat2& m) {
    Real dt = m.det();
    if (dt <= 0) throw precondition_error("matrix determinant is not positive");
    Real s = sqrt(dt);
    return {m.a / s, m.b / s, m.c / s, m.d / s};
}

namespace {
Real max_abs_diff(const Mat2& m, const Mat2& n, int sign) {
    Real d = abs(m.a - sign * n.a);
    d = std::max(d, abs(m.b - sign * n.b));
    d = std::max(d, abs(m.c - sign * n.c));
    d = std::max(d, abs(m.d - sign * n.d));
    return d;
}
} // namespace

Real proj_dist(const Mat2& m, const Mat2& n) {
    return std::min(max_abs_diff(m, n, 1), max_abs_diff(m, n, -1));
}

bool is_identity_proj(const Mat2& m, const Real& tol) {
    return proj_dist(m, Mat2::identity()) < tol;
}

Cplx mobius(const Mat2& m, const Cplx& z) {
    Cplx num{m.a * z.re + m.b, m.a * z.im};
    Cplx den{m.c * z.re + m.d, m.c * z.im};
    return num / den;
}

Real boundary_angle(const Real& x) {
    if (x == 0) return pi_value();
    return atan2(Real(-2) * x, x * x - 1);
}

Real boundary_angle_inf() { return Real(0); }

AxisEnds axis_ends(const Mat2& m) {
    Real tr = m.trace();
    Real disc = tr * tr - 4;
    if (disc <= 0) throw precondition_error("matrix is not hyperbolic");
    AxisEnds ends;
    Real small = rep_epsilon();
    if (abs(m.c) < small) {
        // Fixed points are inf and b/(d-a).
        bool inf_attracting = abs(m.a) > 1;
        Real finite = m.b / (m.d - m.a);
        if (inf_attracting) {
            ends.att_inf = true;
            ends.attracting = 0;
            ends.repelling = finite;
        } else {
            ends.rep_inf = true;
            ends.repelling = 0;
            ends.attracting = finite;
        }
        return ends;
    }
    Real root = sqrt(disc);
    // Fixed points solve c x^2 + (d - a) x - b = 0. Take the root whose
    // numerator avoids cancellation, then recover the other from the
    // product of roots -b/c; the textbook pair loses half the mantissa
    // on large-trace matrices.
    Real diff = m.a - m.d;
    Real x1 = (diff >= 0) ? (diff + root) / (2 * m.c) : (diff - root) / (2 * m.c);
    Real x2 = -m.b / (m.c * x1);
    // Derivative at a fixed point is 1/(c x + d)^2, so |c x + d| > 1 marks
    // the attracting end.
    Real s1 = abs(m.c * x1 + m.d);
    if (s1 > 1) {
        ends.attracting = x1;
        ends.repelling = x2;
    } else {
        ends.attracting = x2;
        ends.repelling = x1;
    }
    return ends;
}

Real translation_length(const Mat2& m) {
    Real half = abs(m.trace()) / 2;
    if (half <= 1) throw precondition_error("matrix is not hyperbolic");
    return 2 * acosh(half);
}

Cplx to_disk(const Cplx& z) {
    Cplx num{z.re, z.im - 1};
    Cplx den{z.re, z.im + 1};
    return num / den;
}

Cplx boundary_point_disk(const Real& x, bool at_inf) {
    if (at_inf) return {Real(1), Real(0)};
    Real d = x * x + 1;
    return {(x * x - 1) / d, Real(-2) * x / d};
}

std::string real_to_string(const Real& x, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << x;
    return os.str();
}

} // namespace convexcalc
