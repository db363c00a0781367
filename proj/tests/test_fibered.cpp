#include "conifold/fibered.hpp"

#include "conifold/rng.hpp"

#include <doctest.h>

#include <numeric>
#include <vector>

using conifold::ArcCrossing;
using conifold::BaseArc;
using conifold::BasePoint;
using conifold::CriticalValue;
using conifold::EllipticFibration;
using conifold::FiberClass;
using conifold::FiberedSphere;
using conifold::Integer;
using conifold::MoebiusMap;
using conifold::MonodromyStep;

namespace {

BasePoint pt(long long p, long long q) { return conifold::normalized(Integer(p), Integer(q)); }

CriticalValue crit(long long p, long long q, long long v1, long long v2, bool trivial = false) {
    CriticalValue cv;
    cv.position = pt(p, q);
    cv.vanishing_class = {Integer(v1), Integer(v2)};
    cv.homotopically_trivial = trivial;
    return cv;
}

FiberClass cls(long long a, long long b) { return {Integer(a), Integer(b)}; }

// matrix-vector product for checking total_monodromy against transport
FiberClass mat_apply(const std::array<Integer, 4>& m, const FiberClass& c) {
    return {m[0] * c[0] + m[1] * c[1], m[2] * c[0] + m[3] * c[1]};
}

FiberClass random_primitive(conifold::Rng& rng) {
    for (;;) {
        long long a = static_cast<long long>(rng.below(11)) - 5;
        long long b = static_cast<long long>(rng.below(11)) - 5;
        if (std::gcd(a, b) == 1) return cls(a, b);
    }
}

}  // namespace

TEST_SUITE("fibered") {

TEST_CASE("base points normalize to primitive pairs with positive lead") {
    CHECK(pt(0, -3) == pt(0, 1));
    CHECK(pt(-2, -4) == pt(1, 2));
    CHECK(pt(6, 4) == pt(3, 2));
    CHECK(pt(5, 0) == pt(1, 0));
    CHECK(conifold::to_string(pt(6, 4)) == "[3:2]");
    CHECK_THROWS_AS(conifold::normalized(0, 0), conifold::DataError);
}

TEST_CASE("Moebius maps act projectively and need unit determinant") {
    MoebiusMap id;
    CHECK(apply(id, pt(2, 3)) == pt(2, 3));

    MoebiusMap invert;  // z -> 1/z
    invert.m = {0, 1, 1, 0};
    CHECK(apply(invert, pt(2, 3)) == pt(3, 2));

    MoebiusMap shift;  // z -> z + 1
    shift.m = {1, 1, 0, 1};
    CHECK(apply(shift, pt(2, 3)) == pt(5, 3));
    CHECK(apply(shift, pt(1, 0)) == pt(1, 0));  // infinity is fixed

    MoebiusMap degenerate;
    degenerate.m = {2, 0, 0, 2};
    CHECK_THROWS_AS(apply(degenerate, pt(1, 1)), conifold::DataError);
}

TEST_CASE("determinant pairing is antisymmetric and unimodular on the basis") {
    CHECK(conifold::fiber_pairing(cls(1, 0), cls(0, 1)) == 1);
    CHECK(conifold::fiber_pairing(cls(0, 1), cls(1, 0)) == -1);
    conifold::Rng rng(401);
    for (int trial = 0; trial < 200; ++trial) {
        FiberClass c = random_primitive(rng), d = random_primitive(rng);
        CHECK(conifold::fiber_pairing(c, d) == -conifold::fiber_pairing(d, c));
        CHECK(conifold::fiber_pairing(c, c) == 0);
    }
}

TEST_CASE("fibration descriptors validate their invariants") {
    EllipticFibration good;
    good.critical_values = {crit(0, 1, 1, 0), crit(1, 1, 0, 1), crit(1, 0, 1, 1)};
    CHECK_NOTHROW(conifold::validate(good));

    EllipticFibration dup = good;
    dup.critical_values.push_back(crit(0, 1, 1, -1));
    CHECK_THROWS_AS(conifold::validate(dup), conifold::DataError);

    EllipticFibration imprimitive = good;
    imprimitive.critical_values[0].vanishing_class = cls(2, 4);
    CHECK_THROWS_AS(conifold::validate(imprimitive), conifold::DataError);

    EllipticFibration zero_unflagged = good;
    zero_unflagged.critical_values[0].vanishing_class = cls(0, 0);
    CHECK_THROWS_AS(conifold::validate(zero_unflagged), conifold::DataError);

    // a trivial-flagged value must record the zero class
    EllipticFibration flagged = good;
    flagged.critical_values[0] = crit(0, 1, 0, 0, true);
    CHECK_NOTHROW(conifold::validate(flagged));
    flagged.critical_values[0].vanishing_class = cls(1, 0);
    CHECK_THROWS_AS(conifold::validate(flagged), conifold::DataError);

    EllipticFibration denormalized = good;
    denormalized.critical_values[0].position = BasePoint{2, 6};
    CHECK_THROWS_AS(conifold::validate(denormalized), conifold::DataError);
}

TEST_CASE("fibre product nodes are the common critical values, in first order") {
    EllipticFibration f1;
    f1.critical_values = {crit(0, 1, 1, 0), crit(1, 1, 0, 1), crit(2, 1, 1, 1)};
    EllipticFibration f2;
    f2.critical_values = {crit(3, 1, 1, 0), crit(4, 1, 0, 1)};

    CHECK(conifold::validate_fibre_product(f1, f2).empty());

    f2.critical_values.push_back(crit(1, 1, 1, 2));
    std::vector<BasePoint> nodes = conifold::validate_fibre_product(f1, f2);
    REQUIRE(nodes.size() == 1);
    CHECK(nodes[0] == pt(1, 1));

    f2.critical_values.push_back(crit(0, 1, 2, 1));
    nodes = conifold::validate_fibre_product(f1, f2);
    REQUIRE(nodes.size() == 2);
    CHECK(nodes[0] == pt(0, 1));  // f1 order, not insertion order
    CHECK(nodes[1] == pt(1, 1));

    // sliding a fibration off itself by an automorphism clears every node
    EllipticFibration spaced;
    spaced.critical_values = {crit(0, 1, 1, 0), crit(2, 1, 0, 1), crit(4, 1, 1, 1)};
    MoebiusMap shift;
    shift.m = {1, 1, 0, 1};
    EllipticFibration moved = conifold::transported(spaced, shift);
    CHECK_NOTHROW(conifold::validate(moved));
    CHECK(moved.critical_values[1].position == pt(3, 1));
    CHECK(conifold::validate_fibre_product(spaced, moved).empty());
    CHECK(moved.critical_values[0].vanishing_class ==
          spaced.critical_values[0].vanishing_class);
}

TEST_CASE("transport: pinned values, identity cases, rejected inputs") {
    CHECK(conifold::picard_lefschetz_transport(cls(1, 0), cls(0, 1)) == cls(1, 1));
    CHECK(conifold::picard_lefschetz_transport(cls(1, 0), cls(0, 0)) == cls(1, 0));
    CHECK(conifold::picard_lefschetz_transport(cls(2, 3), cls(2, 3)) == cls(2, 3));
    CHECK_THROWS_AS(conifold::picard_lefschetz_transport(cls(1, 1), cls(2, 0)),
                    conifold::DataError);
}

TEST_CASE("transport preserves the pairing, exhaustively over small entries") {
    std::vector<FiberClass> classes;
    for (long long a = -3; a <= 3; ++a)
        for (long long b = -3; b <= 3; ++b) classes.push_back(cls(a, b));

    for (const FiberClass& v : classes) {
        bool usable = (v[0] == 0 && v[1] == 0) ||
                      gcd(abs(v[0]), abs(v[1])) == 1;
        if (!usable) continue;
        for (const FiberClass& c : classes) {
            FiberClass tc = conifold::picard_lefschetz_transport(c, v);
            for (const FiberClass& d : classes) {
                FiberClass td = conifold::picard_lefschetz_transport(d, v);
                CHECK(conifold::fiber_pairing(tc, td) == conifold::fiber_pairing(c, d));
            }
        }
    }
}

TEST_CASE("total monodromy: frozen products, unit determinant, trace invariance") {
    EllipticFibration empty;
    CHECK(conifold::total_monodromy(empty) == std::array<Integer, 4>{1, 0, 0, 1});

    EllipticFibration one;
    one.critical_values = {crit(0, 1, 1, 0)};
    CHECK(conifold::total_monodromy(one) == std::array<Integer, 4>{1, -1, 0, 1});

    EllipticFibration two;
    two.critical_values = {crit(0, 1, 1, 0), crit(1, 1, 0, 1)};
    std::array<Integer, 4> m = conifold::total_monodromy(two);
    CHECK(m == std::array<Integer, 4>{1, -1, 1, 0});

    // the matrix must act exactly as the step-by-step transport
    conifold::Rng rng(409);
    for (int trial = 0; trial < 100; ++trial) {
        EllipticFibration f;
        std::size_t count = 1 + rng.below(4);
        for (std::size_t t = 0; t < count; ++t)
            f.critical_values.push_back(
                crit(static_cast<long long>(t), 1, 0, 0));
        for (auto& cv : f.critical_values) cv.vanishing_class = random_primitive(rng);

        std::array<Integer, 4> total = conifold::total_monodromy(f);
        CHECK(total[0] * total[3] - total[1] * total[2] == 1);

        FiberClass c = random_primitive(rng);
        FiberClass walked = c;
        for (const auto& cv : f.critical_values)
            walked = conifold::picard_lefschetz_transport(walked, cv.vanishing_class);
        CHECK(mat_apply(total, c) == walked);

        // changing the basepoint rotates the loop order: the trace survives
        EllipticFibration rotated = f;
        std::rotate(rotated.critical_values.begin(), rotated.critical_values.begin() + 1,
                    rotated.critical_values.end());
        std::array<Integer, 4> rm = conifold::total_monodromy(rotated);
        CHECK(rm[0] + rm[3] == total[0] + total[3]);
    }
}

TEST_CASE("build_sphere: direct construction and transported classes") {
    EllipticFibration f1;
    f1.critical_values = {crit(0, 1, 1, 0)};
    EllipticFibration f2;
    f2.critical_values = {crit(1, 1, 0, 1), crit(2, 1, 1, 2)};

    BaseArc arc;
    arc.id = 7;
    arc.a_index = 0;
    arc.b_index = 0;

    FiberedSphere plain = conifold::build_sphere(f1, f2, arc);
    CHECK(plain.c1 == cls(1, 0));
    CHECK(plain.c2 == cls(0, 1));
    CHECK(plain.arc.id == 7);

    // monodromy applies in listed order; both orders frozen by hand:
    // (0,1) is fixed by its own twist, then <(0,1),(1,2)> = -1 shifts it
    BaseArc walked = arc;
    walked.monodromy_path = {MonodromyStep{2, 0}, MonodromyStep{2, 1}};
    FiberedSphere s = conifold::build_sphere(f1, f2, walked);
    CHECK(s.c2 == cls(-1, -1));

    BaseArc reversed = arc;
    reversed.monodromy_path = {MonodromyStep{2, 1}, MonodromyStep{2, 0}};
    FiberedSphere r = conifold::build_sphere(f1, f2, reversed);
    CHECK(r.c2 == cls(-1, -2));
    CHECK(r.c2 != s.c2);
}

TEST_CASE("build_sphere rejects degenerate and out-of-range input") {
    EllipticFibration f1;
    f1.critical_values = {crit(0, 1, 1, 0)};
    EllipticFibration f2;
    f2.critical_values = {crit(1, 1, -1, 0), crit(2, 1, 1, 1)};

    BaseArc arc;
    arc.a_index = 0;
    arc.b_index = 0;

    // proportional non-trivial circles never close up to a sphere
    CHECK_THROWS_WITH_AS(conifold::build_sphere(f1, f2, arc),
                         "not a sphere: collapsing circles do not span H1(T^2)",
                         conifold::DataError);

    // proportionality created by the monodromy is caught too
    BaseArc twisted;
    twisted.a_index = 0;
    twisted.b_index = 1;
    twisted.monodromy_path = {MonodromyStep{2, 1}};
    FiberedSphere ok = conifold::build_sphere(f1, f2, twisted);
    CHECK(ok.c2 == cls(1, 1));

    // <(-1,0),(1,1)> = -1 lands the start class on (-2,-1): still spanning
    BaseArc axis;
    axis.a_index = 0;
    axis.b_index = 0;
    axis.monodromy_path = {MonodromyStep{2, 1}};
    FiberedSphere moved = conifold::build_sphere(f1, f2, axis);
    CHECK(moved.c2 == cls(-2, -1));

    BaseArc bad = arc;
    bad.b_index = 5;
    CHECK_THROWS_AS(conifold::build_sphere(f1, f2, bad), conifold::DataError);
    bad.b_index = 0;
    bad.monodromy_path = {MonodromyStep{3, 0}};
    CHECK_THROWS_AS(conifold::build_sphere(f1, f2, bad), conifold::DataError);
    bad.monodromy_path = {MonodromyStep{2, 9}};
    CHECK_THROWS_AS(conifold::build_sphere(f1, f2, bad), conifold::DataError);

    // endpoints sitting on a node of the fibre product are rejected
    EllipticFibration f2_node = f2;
    f2_node.critical_values.push_back(crit(0, 1, 0, 1));
    BaseArc at_node;
    at_node.a_index = 0;
    at_node.b_index = 1;
    CHECK_THROWS_AS(conifold::build_sphere(f1, f2_node, at_node), conifold::DataError);

    // a trivial circle waives the spanning requirement
    EllipticFibration f1_trivial;
    f1_trivial.critical_values = {crit(0, 1, 0, 0, true)};
    BaseArc candidate;
    candidate.a_index = 0;
    candidate.b_index = 0;
    FiberedSphere flat = conifold::build_sphere(f1_trivial, f2, candidate);
    CHECK(flat.c1 == cls(0, 0));
}

TEST_CASE("sphere_pairing: pinned crossing count and error taxonomy") {
    FiberedSphere s1, s2;
    s1.arc.id = 1;
    s1.arc.a_index = 0;
    s1.arc.b_index = 0;
    s1.c1 = cls(1, 0);
    s1.c2 = cls(1, 0);
    s2.arc.id = 2;
    s2.arc.a_index = 1;
    s2.arc.b_index = 1;
    s2.c1 = cls(0, 1);
    s2.c2 = cls(0, 1);

    // no recorded crossings
    CHECK(conifold::sphere_pairing(s1, s2) == 0);

    s1.arc.crossings = {ArcCrossing{2, 1}};
    s2.arc.crossings = {ArcCrossing{1, -1}};
    CHECK(conifold::sphere_pairing(s1, s2) == 1);
    CHECK(conifold::sphere_pairing(s2, s1) == -1);

    // a second crossing with the opposite sign cancels the first
    s1.arc.crossings.push_back(ArcCrossing{2, -1});
    s2.arc.crossings.push_back(ArcCrossing{1, 1});
    CHECK(conifold::sphere_pairing(s1, s2) == 0);

    // mismatched records are data errors
    s2.arc.crossings.pop_back();
    CHECK_THROWS_AS(conifold::sphere_pairing(s1, s2), conifold::DataError);
    s2.arc.crossings = {ArcCrossing{1, -1}, ArcCrossing{1, -1}};
    CHECK_THROWS_AS(conifold::sphere_pairing(s1, s2), conifold::DataError);

    // shared endpoints between distinct arcs are non-transverse
    FiberedSphere clash = s2;
    clash.arc.crossings.clear();
    s1.arc.crossings.clear();
    clash.arc.a_index = s1.arc.a_index;
    CHECK_THROWS_WITH_AS(conifold::sphere_pairing(s1, clash), "non-transverse configuration",
                         conifold::DataError);

    // the push-off of a sphere over the same arc pairs to zero
    FiberedSphere pushed = s1;
    CHECK(conifold::sphere_pairing(s1, pushed) == 0);
}

TEST_CASE("sphere_pairing is antisymmetric on random configurations") {
    conifold::Rng rng(419);
    for (int trial = 0; trial < 200; ++trial) {
        FiberedSphere s1, s2;
        s1.arc.id = 1;
        s2.arc.id = 2;
        s1.arc.a_index = 0;
        s1.arc.b_index = 0;
        s2.arc.a_index = 1;
        s2.arc.b_index = 1;
        s1.c1 = random_primitive(rng);
        s1.c2 = random_primitive(rng);
        s2.c1 = random_primitive(rng);
        s2.c2 = random_primitive(rng);
        std::size_t crossings = rng.below(4);
        for (std::size_t t = 0; t < crossings; ++t) {
            int sign = rng.below(2) == 0 ? 1 : -1;
            s1.arc.crossings.push_back(ArcCrossing{2, sign});
            s2.arc.crossings.push_back(ArcCrossing{1, -sign});
        }
        Integer forward = conifold::sphere_pairing(s1, s2);
        Integer backward = conifold::sphere_pairing(s2, s1);
        CHECK(forward == -backward);
    }
}

TEST_CASE("null homology needs both trivial hypotheses") {
    EllipticFibration f1;
    f1.critical_values = {crit(0, 1, 0, 0, true), crit(5, 1, 1, 0)};
    EllipticFibration f2;
    f2.critical_values = {crit(1, 1, 0, 0, true), crit(2, 1, 0, 1)};

    BaseArc arc;
    arc.a_index = 0;
    arc.b_index = 0;
    FiberedSphere lemma_case = conifold::build_sphere(f1, f2, arc);
    CHECK(conifold::is_null_homologous(lemma_case, f1, f2));

    // nontrivial on the second end: candidate fails
    BaseArc to_nontrivial;
    to_nontrivial.a_index = 0;
    to_nontrivial.b_index = 1;
    FiberedSphere half = conifold::build_sphere(f1, f2, to_nontrivial);
    CHECK_FALSE(conifold::is_null_homologous(half, f1, f2));

    // nontrivial on the first end: fails even with trivial second end
    BaseArc from_nontrivial;
    from_nontrivial.a_index = 1;
    from_nontrivial.b_index = 0;
    FiberedSphere other_half = conifold::build_sphere(f1, f2, from_nontrivial);
    CHECK_FALSE(conifold::is_null_homologous(other_half, f1, f2));

    // both primitive: plainly false
    BaseArc generic;
    generic.a_index = 1;
    generic.b_index = 1;
    FiberedSphere solid = conifold::build_sphere(f1, f2, generic);
    CHECK_FALSE(conifold::is_null_homologous(solid, f1, f2));
}

TEST_CASE("a sphere family exports as a valid cycle configuration") {
    EllipticFibration f1;
    f1.critical_values = {crit(0, 1, 1, 0), crit(5, 1, 1, 1), crit(7, 1, 1, 2)};
    EllipticFibration f2;
    f2.critical_values = {crit(1, 1, 0, 1), crit(2, 1, 1, -1), crit(3, 1, 2, 1)};

    std::vector<BaseArc> arcs(3);
    for (int t = 0; t < 3; ++t) {
        arcs[static_cast<std::size_t>(t)].id = t;
        arcs[static_cast<std::size_t>(t)].a_index = t;
        arcs[static_cast<std::size_t>(t)].b_index = t;
    }
    // one transverse crossing between arcs 0 and 1; arc 2 stays clear
    arcs[0].crossings = {ArcCrossing{1, 1}};
    arcs[1].crossings = {ArcCrossing{0, -1}};

    conifold::CycleConfiguration config = conifold::fibered_configuration(f1, f2, arcs);
    REQUIRE(config.size() == 3);
    CHECK_NOTHROW(conifold::validate(config));
    REQUIRE(config.pairing.has_value());
    CHECK(config.classes == *config.pairing);

    // crossing pair not disjoint, clear pair disjoint
    CHECK_FALSE(conifold::cycles_disjoint(config, 0, 1));
    CHECK(conifold::cycles_disjoint(config, 0, 2));
    CHECK(conifold::cycles_disjoint(config, 1, 2));

    // <c1,c1'> * <c2,c2'> with one positive crossing
    Integer expected = conifold::fiber_pairing(cls(1, 0), cls(1, 1)) *
                       conifold::fiber_pairing(cls(0, 1), cls(1, -1));
    CHECK(config.pairing->at(0, 1) == expected);
}

}  // TEST_SUITE
