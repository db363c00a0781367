#pragma once

#include <cstdint>

namespace conifold {

// Betti/Euler bookkeeping for a closed oriented 6-manifold. Torsion is out of
// scope; only the listed invariants are carried.
struct SixManifoldTopology {
    long long b2 = 0;
    long long b3 = 0;
    long long b4 = 0;
    long long euler = 0;
    bool simply_connected = false;
    bool c1_zero = false;
    bool has_null_homologous_surgered_sphere = false;

    bool operator==(const SixManifoldTopology&) const = default;
};

// Throws DataError unless: b2, b3, b4 >= 0; b3 even; and, when simply
// connected, b2 == b4 and euler == 2 + 2*b2 - b3.
void validate(const SixManifoldTopology& t);

// Surgery replacing n disjoint 3-spheres whose classes span an r-dimensional
// subspace by 2-spheres: b3 -= 2r, b2 += n-r, b4 += n-r, euler += 2n.
// `good` asserts that a full-support integer relation exists among the sphere
// classes; without it the surgered space carries no symplectic structure, so
// good = false is an error. Flags are preserved; the null-homologous-sphere
// flag is additionally set when r = 0 and n >= 1 (every surgered class is then
// zero).
SixManifoldTopology conifold_transition(const SixManifoldTopology& x, long long n, long long r,
                                        bool good);

// Formal inverse: replaces n 2-spheres by 3-spheres, restoring the smoothing.
// No relation hypothesis is needed in this direction.
SixManifoldTopology reverse_transition(const SixManifoldTopology& y, long long n, long long r);

struct ObstructionFlags {
    // Simply connected, c1 = 0 and b3 = 0: no Kahler manifold in sight.
    bool non_kahler_by_b3 = false;
    // A surgered 2-sphere out of a null-homologous 3-sphere caps a 4-chain,
    // killing the H4 -> H2 intersection map on its class.
    bool hard_lefschetz_violated = false;
    // Each sphere added by the producing transition contributes positive area,
    // so c2 . [omega] can only go up. Qualitative flag; producing_n = 0 means
    // the producing transition is unknown and the flag stays false.
    bool c2_omega_increases = false;

    bool operator==(const ObstructionFlags&) const = default;
};

ObstructionFlags obstruction_flags(const SixManifoldTopology& y, long long producing_n = 0);

}  // namespace conifold
