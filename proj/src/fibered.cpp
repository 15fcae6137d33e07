#include "convexcalc/fibered.h"

#include "convexcalc/snf.h"

namespace convexcalc {

TorusHomology mapping_torus_h1(const MappingTorus& mt) {
    IMat a = homology_action(mt.monodromy);
    int n = static_cast<int>(a.size());
    IMat m = imat_sub(a, imat_identity(n));
    SmithForm sf = smith_normal_form(m);
    TorusHomology out;
    out.free_rank = 1 + (n - sf.rank);
    for (long long s : sf.factors)
        if (s != 1) out.torsion.push_back(s);
    return out;
}

}  // namespace convexcalc
