// Betti and flag bookkeeping for the surgery that trades 3-spheres for
// 2-spheres and back. All content is elementary arithmetic; the value of the
// module is that every formula lives in exactly one place and is validated.

#include "conifold/surgery.hpp"

#include "conifold/integer.hpp"

namespace conifold {

void validate(const SixManifoldTopology& t) {
    if (t.b2 < 0 || t.b3 < 0 || t.b4 < 0) throw DataError("negative Betti number");
    if (t.b3 % 2 != 0) throw DataError("b3 must be even");
    if (t.simply_connected) {
        if (t.b2 != t.b4) throw DataError("simply connected but b2 != b4");
        if (t.euler != 2 + 2 * t.b2 - t.b3)
            throw DataError("simply connected but euler != 2 + 2*b2 - b3");
    }
}

SixManifoldTopology conifold_transition(const SixManifoldTopology& x, long long n, long long r,
                                        bool good) {
    if (!good)
        throw DataError("no good relation: every small resolution destroys the symplectic structure");
    if (n < 0) throw DataError("sphere count negative");
    if (r < 0 || r > n) throw DataError("span dimension outside [0, n]");
    if (r > x.b3 / 2) throw DataError("span dimension exceeds b3/2");

    SixManifoldTopology y = x;
    y.b3 = x.b3 - 2 * r;
    y.b2 = x.b2 + (n - r);
    y.b4 = x.b4 + (n - r);
    y.euler = x.euler + 2 * n;
    if (n >= 1 && r == 0) y.has_null_homologous_surgered_sphere = true;
    return y;
}

SixManifoldTopology reverse_transition(const SixManifoldTopology& y, long long n, long long r) {
    if (n < 0) throw DataError("curve count negative");
    if (r < 0 || r > n) throw DataError("span dimension outside [0, n]");
    if (y.b2 < n - r || y.b4 < n - r) throw DataError("not enough b2/b4 to remove");

    SixManifoldTopology x = y;
    x.b3 = y.b3 + 2 * r;
    x.b2 = y.b2 - (n - r);
    x.b4 = y.b4 - (n - r);
    x.euler = y.euler - 2 * n;
    return x;
}

ObstructionFlags obstruction_flags(const SixManifoldTopology& y, long long producing_n) {
    ObstructionFlags f;
    f.non_kahler_by_b3 = y.simply_connected && y.c1_zero && y.b3 == 0;
    f.hard_lefschetz_violated = y.has_null_homologous_surgered_sphere;
    f.c2_omega_increases = producing_n >= 1;
    return f;
}

}  // namespace conifold
