#pragma once

#include "conifold/relations.hpp"
#include "conifold/surgery.hpp"

#include <string>
#include <vector>

namespace conifold {

// P^1 x K3: b2 = 23, b3 = 0, b4 = 23, euler = 48, simply connected, c1 != 0.
SixManifoldTopology p1_k3_topology();

// m pairwise-disjoint null-homologous 3-spheres in the product (each bounds a
// 4-chain, so every class row is zero and every nonempty subset is good with
// all-ones coefficients).
CycleConfiguration preset_product(int m, const SixManifoldTopology& ambient = p1_k3_topology());

struct HardLefschetzScenario {
    SixManifoldTopology before;
    SixManifoldTopology after;
    ObstructionFlags flags;
    CycleConfiguration config;
    std::vector<std::string> notes;
};

// Single null-homologous sphere, surgered with n = 1, r = 0: the resulting
// 2-sphere is null-homologous in the new space, so capping against the
// symplectic class kills the H4 -> H2 intersection map on it.
HardLefschetzScenario preset_hard_lefschetz();

// Registered preset names: "product", "hard-lefschetz".
std::vector<std::string> preset_names();

}  // namespace conifold
