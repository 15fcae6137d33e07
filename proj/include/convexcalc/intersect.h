#pragma once

#include "convexcalc/geodesic.h"

#include <map>

namespace convexcalc {

// One transversal crossing of a translate of the second curve's axis with
// the fundamental window along the first curve's axis.
struct Crossing {
    Real t;      // parameter along the first axis
    Real s;      // parameter of coset^-1 * point along the second axis
    int sigma;   // +1 when the second curve crosses right to left
    Word coset;  // g such that the crossing lies on g * axis2; chosen so that
                 // s falls inside the second axis window
};

class Intersector {
public:
    explicit Intersector(const Surface& s) : cache_(s) {}

    const Surface& surface() const { return cache_.surface(); }
    GeodesicCache& cache() { return cache_; }

    // Geometric intersection number of two primitive classes. Equal or
    // mutually inverse classes count as two parallel copies.
    long long geometric(const Word& c1, const Word& c2);

    long long self_intersection(const Word& c);
    bool is_simple(const Word& c);

    // Crossings along c1, sorted by parameter. The classes must be distinct
    // and not mutually inverse.
    std::vector<Crossing> crossings(const Word& c1, const Word& c2);

    long long signed_sum(const Word& c1, const Word& c2);

private:
    std::vector<Crossing> window_crossings(const GeodesicData& g1,
                                           const GeodesicData& g2);
    const GeodesicData& primitive_data(const Word& c);

    GeodesicCache cache_;
    std::map<std::pair<Word, Word>, long long> count_memo_;
};

} // namespace convexcalc
