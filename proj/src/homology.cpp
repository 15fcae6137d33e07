#include "convexcalc/homology.h"

#include <string>

namespace convexcalc {

HVec homology_class(const Word& w, int genus) {
    HVec v(2 * genus, 0);
    for (int x : w) v[gen_index(x)] += (x > 0) ? 1 : -1;
    return v;
}

long long sym_pairing(const HVec& x, const HVec& y) {
    long long s = 0;
    for (size_t i = 0; i + 1 < x.size(); i += 2)
        s += x[i] * y[i + 1] - x[i + 1] * y[i];
    return s;
}

bool is_null_class(const HVec& x) {
    for (long long v : x)
        if (v != 0) return false;
    return true;
}

HVec hvec_add(const HVec& x, const HVec& y) {
    HVec out = x;
    for (size_t i = 0; i < out.size(); ++i) out[i] += y[i];
    return out;
}

HVec hvec_sub(const HVec& x, const HVec& y) {
    HVec out = x;
    for (size_t i = 0; i < out.size(); ++i) out[i] -= y[i];
    return out;
}

HVec hvec_scale(const HVec& x, long long k) {
    HVec out = x;
    for (auto& v : out) v *= k;
    return out;
}

HVec hvec_neg(const HVec& x) { return hvec_scale(x, -1); }

HVec transvect(const HVec& x, const HVec& c) {
    return hvec_add(x, hvec_scale(c, sym_pairing(x, c)));
}

std::string hvec_to_string(const HVec& x) {
    std::string out = "[";
    for (size_t i = 0; i < x.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(x[i]);
    }
    return out + "]";
}

} // namespace convexcalc
