#include "conifold/presets.hpp"

#include "conifold/integer.hpp"
#include "conifold/matrix.hpp"

#include <string>

namespace conifold {

SixManifoldTopology p1_k3_topology() {
    SixManifoldTopology t;
    t.b2 = 23;
    t.b3 = 0;
    t.b4 = 23;
    t.euler = 48;
    t.simply_connected = true;
    t.c1_zero = false;
    return t;
}

CycleConfiguration preset_product(int m, const SixManifoldTopology& ambient) {
    if (m < 1) throw DataError("product preset needs at least one sphere");
    validate(ambient);
    const std::size_t count = static_cast<std::size_t>(m);
    const std::size_t width = ambient.b3 > 0 ? static_cast<std::size_t>(ambient.b3) : 1;

    CycleConfiguration config;
    config.labels.reserve(count);
    for (std::size_t t = 0; t < count; ++t)
        config.labels.push_back("sphere" + std::to_string(t));
    config.classes = IntegerMatrix(count, width);  // each sphere bounds a 4-chain
    config.pairing = IntegerMatrix(count, count);
    config.disjoint.assign(count, {});
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j)
            if (i != j) config.disjoint[i].push_back(static_cast<int>(j));
    config.provenance.generator = "product";
    config.provenance.parameters = {{"m", std::to_string(m)}};
    validate(config);
    return config;
}

HardLefschetzScenario preset_hard_lefschetz() {
    HardLefschetzScenario sc;
    sc.before = p1_k3_topology();
    sc.config = preset_product(1);
    sc.after = conifold_transition(sc.before, 1, 0, true);
    sc.flags = obstruction_flags(sc.after, 1);
    sc.notes = {
        "the sphere bounds a 4-chain, so its class is zero and the one-term relation 1*0 = 0 "
        "makes the singleton subset good",
        "surgery with n = 1, r = 0 adds one to b2 and b4, leaves b3 alone, and adds two to "
        "the Euler characteristic",
        "the surgered 2-sphere also bounds, so intersecting against any hyperplane class kills "
        "it and the H4 -> H2 intersection map cannot be an isomorphism",
    };
    return sc;
}

std::vector<std::string> preset_names() { return {"product", "hard-lefschetz"}; }

}  // namespace conifold
