#pragma once

#include "convexcalc/homology.h"
#include "convexcalc/snf.h"
#include "convexcalc/words.h"

#include <string>
#include <vector>

namespace convexcalc {

// One Dehn twist along a curve of the fixed generating family.
struct TwistFactor {
    int curve = 0;  // index into twist_family(genus)
    int exponent = 1;
};

// Mapping class as a product of family twists; the leftmost factor acts
// last, matching function composition order.
struct MappingClassWord {
    int genus = 2;
    std::vector<TwistFactor> factors;
};

struct FamilyCurve {
    std::string name;
    Word loop;  // based representative
    HVec cls;
};

// The 2g+1 twist curves a1..ag, b1, b2, z1..z(g-1), where z_i is the curve
// running around the waist between handles i and i+1. Twists along this
// family generate; other twists arise by conjugation.
const std::vector<FamilyCurve>& twist_family(int genus);

int twist_index(const std::string& name, int genus);

// Accepts "Ta1^2 Tb1^-1 Tz1" and the short negative form "Tb1-1"; an empty
// string or "id" is the identity.
MappingClassWord parse_mapping_class(const std::string& text, int genus);
std::string format_mapping_class(const MappingClassWord& f);

MappingClassWord inverse_mapping_class(const MappingClassWord& f);
// f after g.
MappingClassWord compose_mapping_class(const MappingClassWord& f,
                                       const MappingClassWord& g);

// Image of a based loop, freely reduced.
Word apply_to_loop(const MappingClassWord& f, const Word& x);

// Image of a free homotopy class, in canonical form.
Word apply_mapping_class(const MappingClassWord& f, const Word& c);

// Induced matrix on first homology in the (a1, b1, ..., ag, bg) basis.
IMat homology_action(const MappingClassWord& f);

struct PaReport {
    bool no_invariant_curve = false;
    Word witness;              // a preserved curve, when one exists
    std::string witness_name;  // family name when the witness is a family curve
    bool cyclotomic_free = false;
    std::vector<int> cyclotomic_hits;  // n with Phi_n dividing the char poly
    int curves_checked = 0;
    int bound = 0;
    bool family_exhausted = true;
};

// Scans the twist orbit of the family curves, pruned to canonical words of
// length at most bound, for curves preserved up to isotopy and orientation,
// and factors the characteristic polynomial of the homology action against
// the cyclotomic table. Necessary evidence only: a clean report does not
// prove the class pseudo-Anosov.
PaReport pa_certificate(const MappingClassWord& f, int bound,
                        int cap = 200000);

} // namespace convexcalc
