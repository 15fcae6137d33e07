#pragma once

#include "convexcalc/homology.h"
#include "convexcalc/intersect.h"

#include <optional>
#include <vector>

namespace convexcalc {

// Class of the right Dehn twist image T_c^k(x), for a simple closed curve c.
// Built from the crossing list by inserting a conjugate of c^(k*sigma) at
// every crossing; agrees with the family twist tables where both apply.
Word twist_image(Intersector& eng, const Word& c, const Word& x, int k);

// One cut-and-paste candidate: travel along the first curve from crossing i
// to crossing j (wrapping the window w times), return along the second curve
// (n extra periods). cls is the free homotopy class of the closed-up loop.
struct ArcSurgery {
    int i, j, w, n;
    Word cls;
};

// All two-arc resolutions of a transverse pair, deduplicated by class and
// ordered by (i, j, w, n). Every candidate must be re-verified by the caller;
// this list is a superset of the useful surgeries.
std::vector<ArcSurgery> arc_surgeries(Intersector& eng, const Word& x, const Word& c);

// Boundary class of a regular neighborhood of x cup y when i(x, y) = 1; a
// simple curve disjoint from both (separating off a one-holed torus).
Word once_pair_boundary(Intersector& eng, const Word& x, const Word& y);

// Target for the curve search: exact geometric intersection numbers against
// the listed curves, plus homology-level side conditions.
struct CurveQuery {
    std::vector<std::pair<Word, long long>> pattern;
    std::vector<std::pair<Word, long long>> below;  // i(w, curve) < bound
    bool nonseparating = true;
    std::vector<HVec> avoid_classes;  // excluded up to sign
    std::vector<Word> seeds;          // tried (and expanded) first
    int max_pops = 3000;
};

// Deterministic best-first search over twist images of simple seed curves.
// Returns a canonical word meeting the query exactly, or nothing when the
// budget runs out.
std::optional<Word> find_curve(Intersector& eng, const CurveQuery& q);

// Simple nonseparating curve meeting a exactly once.
Word dual_curve(Intersector& eng, const Word& a);

} // namespace convexcalc
