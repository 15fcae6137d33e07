#pragma once

#include "convexcalc/intersect.h"
#include "convexcalc/words.h"

#include <string>
#include <vector>

namespace convexcalc {

enum class SequenceProfile { disjoint, once, fact1, rel, fact0 };

// Path through the curve complex together with the conditions it claims.
// Terms are free homotopy classes; when a class appears twice within two
// steps it stands for a parallel pushed-off copy, and the intersection
// number 0 of a simple class with itself is read as disjointness.
struct CurveSequence {
    SequenceProfile profile = SequenceProfile::disjoint;
    std::vector<Word> curves;
    Word rel_anchor;  // curve every term avoids (rel profile only)
    bool has_parallel_copies = false;
};

struct SequenceCheck {
    bool ok = true;
    std::vector<std::string> failures;
};

// Re-derives every condition the profile claims straight from the
// intersection engine. Connectors call this on their own output before
// returning; it is public so reports can be regenerated for the CLI.
SequenceCheck verify_sequence(Intersector& eng, const CurveSequence& seq);

std::string profile_name(SequenceProfile p);

// Consecutive terms disjoint. Accepts any simple essential curves.
CurveSequence connect_disjoint(Intersector& eng, const Word& a, const Word& b);

// Consecutive terms meet exactly once; all terms nonseparating.
CurveSequence connect_once(Intersector& eng, const Word& a, const Word& b);

// Consecutive terms disjoint and non-homologous; all terms nonseparating.
CurveSequence connect_fact1(Intersector& eng, const Word& a, const Word& b);

// Connects b to b2 through nonseparating curves disjoint from alpha, with
// consecutive terms meeting once. Requires b, b2 disjoint from alpha and
// not homologous to it.
CurveSequence connect_rel(Intersector& eng, const Word& alpha, const Word& b,
                          const Word& b2);

// Consecutive terms meet exactly once and terms two apart are disjoint;
// all terms nonseparating.
CurveSequence connect_fact0(Intersector& eng, const Word& a, const Word& b);

} // namespace convexcalc
