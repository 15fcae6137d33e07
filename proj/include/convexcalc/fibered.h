#pragma once

#include <string>
#include <vector>

#include "convexcalc/homology.h"
#include "convexcalc/mcg.h"
#include "convexcalc/words.h"

namespace convexcalc {

// Fibered 3-manifold determined by a surface diffeomorphism: the surface
// times an interval with its ends glued by the monodromy.
struct MappingTorus {
    MappingClassWord monodromy;

    int genus() const { return monodromy.genus; }
};

// Finitely generated abelian group: free_rank copies of Z plus one cyclic
// group per torsion entry. Torsion entries exclude 1 and each divides the
// next.
struct TorusHomology {
    int free_rank = 0;
    std::vector<long long> torsion;
};

// First homology of the mapping torus: Z (the circle direction) plus the
// cokernel of A - I where A is the homology action of the monodromy.
TorusHomology mapping_torus_h1(const MappingTorus& mt);

}  // namespace convexcalc
