#pragma once

#include "convexcalc/words.h"

#include <vector>

namespace convexcalc {

// First homology of the genus-g surface with coordinates ordered
// (a1, b1, a2, b2, ..., ag, bg).
using HVec = std::vector<long long>;

HVec homology_class(const Word& w, int genus);

// Algebraic intersection pairing with <a_i, b_i> = +1.
long long sym_pairing(const HVec& x, const HVec& y);

bool is_null_class(const HVec& x);

HVec hvec_add(const HVec& x, const HVec& y);
HVec hvec_sub(const HVec& x, const HVec& y);
HVec hvec_scale(const HVec& x, long long k);
HVec hvec_neg(const HVec& x);

// Transvection along c: x + <x, c> c.
HVec transvect(const HVec& x, const HVec& c);

std::string hvec_to_string(const HVec& x);

} // namespace convexcalc
