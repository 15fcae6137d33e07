#pragma once

#include "convexcalc/surface.h"

#include <map>
#include <memory>

namespace convexcalc {

// Point on the boundary circle R u {inf} of the upper half-plane.
struct BPoint {
    Real x;
    bool inf = false;
    BPoint() : x(0) {}
    explicit BPoint(Real v, bool i = false) : x(std::move(v)), inf(i) {}
};

BPoint mobius_boundary(const Mat2& m, const BPoint& p);

// Ideal endpoints of the geodesic through two interior points, the second
// component on the q side.
struct BoundaryPair {
    BPoint u, w;
};
BoundaryPair geodesic_boundary(const Cplx& p, const Cplx& q);

// One tile visited by an axis while it sweeps a fundamental window.
struct TileStep {
    Word word;       // group element of the tile
    Mat2 mat;
    Real entry;      // axis parameter where the axis enters the tile
    int entry_edge;  // base edge crossed to enter, -1 for the seed tile
    int exit_edge;   // base edge crossed on leaving, -1 until known
};

// Cached data for the closed geodesic of a conjugacy class: holonomy, axis
// frame, translation length, and one period's worth of crossed tiles. The
// frame sends the axis to the positive imaginary ray, repelling end to 0, so
// axis parameters are logarithms of heights.
struct GeodesicData {
    Word canon;
    int period = 0;        // cyclic period of canon; primitive iff == size
    Mat2 mat;
    Real len;
    BPoint end_rep, end_att;
    Mat2 frame;
    Real win_start;        // window is [win_start, win_start + len)
    std::vector<TileStep> tiles;
    bool near_vertex = false;  // axis passes very close to a tiling vertex

    Cplx axis_point(const Real& t) const;
    bool primitive() const { return period == static_cast<int>(canon.size()); }
};

class GeodesicCache {
public:
    explicit GeodesicCache(const Surface& s);

    const Surface& surface() const { return surf_; }

    // Canonicalizes the class and builds (or reuses) its geodesic data.
    // Throws precondition_error for the trivial class.
    const GeodesicData& get(const Word& w);

    // Locates the tile containing an interior point, starting the walk from
    // a given tile. Returns its group element as a word.
    Word locate_tile(const Cplx& z, Word start = {}) const;

    // Signed distance data for the base polygon sides.
    bool inside_base(const Cplx& z, const Real& slack) const;

    const BoundaryPair& edge_bound(int e) const { return edge_bounds_[e]; }

private:
    void build(GeodesicData& g) const;
    int most_violated_edge(const Cplx& z) const;

    const Surface& surf_;
    std::vector<BoundaryPair> edge_bounds_;      // per base edge
    std::vector<Real> edge_center_, edge_rad2_;  // half-plane circles
    std::vector<int> edge_sign_;                 // sign of the inside
    std::map<Word, std::unique_ptr<GeodesicData>> cache_;
};

} // namespace convexcalc
