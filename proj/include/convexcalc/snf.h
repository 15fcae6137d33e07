#pragma once

#include <utility>
#include <vector>

namespace convexcalc {

// Dense integer matrix, row major.
using IMat = std::vector<std::vector<long long>>;

IMat imat_identity(int n);
IMat imat_mul(const IMat& a, const IMat& b);
IMat imat_sub(const IMat& a, const IMat& b);

struct SmithForm {
    int rank = 0;
    // Nonzero invariant factors s1 | s2 | ... | s_rank, all positive.
    std::vector<long long> factors;
};

// Diagonalization over the integers by row and column operations.
SmithForm smith_normal_form(const IMat& m);

// Coefficients of det(xI - a), constant term first, leading coefficient 1.
std::vector<long long> char_poly(const IMat& a);

// Exact division test for integer polynomials with monic divisor p.
// Coefficients constant term first.
bool poly_divides(const std::vector<long long>& p,
                  const std::vector<long long>& q);

// Cyclotomic polynomials of degree at most max_degree, as (n, coefficients).
std::vector<std::pair<int, std::vector<long long>>>
cyclotomics_up_to(int max_degree);

} // namespace convexcalc
