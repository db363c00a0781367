#pragma once

#include "conifold/integer.hpp"
#include "conifold/relations.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace conifold {

// Point of the base P^1 as a primitive homogeneous integer pair [p : q],
// normalized so gcd = 1 and the first nonzero entry is positive.
struct BasePoint {
    Integer p = 0;
    Integer q = 1;

    bool operator==(const BasePoint&) const = default;
};
BasePoint normalized(Integer p, Integer q);
std::string to_string(const BasePoint& pt);

// Integer Moebius transform z -> (a z + b) / (c z + d), det = +-1.
struct MoebiusMap {
    std::array<Integer, 4> m{1, 0, 0, 1};  // a b c d
};
BasePoint apply(const MoebiusMap& f, const BasePoint& pt);

// H1(T^2) class in a fixed reference basis.
using FiberClass = std::array<Integer, 2>;

// Determinant pairing <c, d> = c1*d2 - c2*d1.
Integer fiber_pairing(const FiberClass& c, const FiberClass& d);

struct CriticalValue {
    BasePoint position;
    FiberClass vanishing_class{0, 0};
    bool homotopically_trivial = false;
};

// Elliptic fibration descriptor: distinct critical values, each with a nodal
// fibre whose vanishing class is primitive, or flagged trivial (class then
// recorded as zero). At most one node per fibre; anything else is rejected.
struct EllipticFibration {
    std::vector<CriticalValue> critical_values;
};
void validate(const EllipticFibration& f);

// Composition with a base automorphism (critical values move, classes do not).
EllipticFibration transported(const EllipticFibration& f, const MoebiusMap& map);

// One monodromy step: which fibration's critical value is encircled while
// carrying fibre data along the arc.
struct MonodromyStep {
    int fibration = 1;  // 1 or 2
    int index = 0;      // into that fibration's critical_values
};

// Transverse crossing with another arc, with the intersection sign taken in
// the order (this arc's tangent, other arc's tangent); the partner record on
// the other arc therefore carries the opposite sign.
struct ArcCrossing {
    int other_arc = 0;
    int sign = 1;
};

// Combinatorial arc from a critical value of the first fibration to one of
// the second; interior avoids all critical values. Crossing and monodromy
// data are supplied by the caller (arcs are not analytic curves here).
struct BaseArc {
    int id = 0;
    int a_index = 0;  // critical value of fibration 1 (start)
    int b_index = 0;  // critical value of fibration 2 (end)
    std::vector<ArcCrossing> crossings;
    std::vector<MonodromyStep> monodromy_path;  // applied to the b-side class
};

// Common critical values of the two fibrations = nodes of the fibre product.
// An empty list certifies the fibre product is smooth.
std::vector<BasePoint> validate_fibre_product(const EllipticFibration& f1,
                                              const EllipticFibration& f2);

// c -> c + <c, v> v. v = 0 (trivial vanishing cycle) acts as the identity.
FiberClass picard_lefschetz_transport(const FiberClass& c, const FiberClass& v);

// Total monodromy of a loop around all critical values, as a 2x2 matrix
// acting on column vectors: product of the per-value transvections in list
// order. Conjugation-invariant data (trace) is basepoint-independent.
std::array<Integer, 4> total_monodromy(const EllipticFibration& f);

// Sphere fibered over an arc: one thimble circle collapsing at each end.
struct FiberedSphere {
    BaseArc arc;
    FiberClass c1{0, 0};  // class of the fibration-1 circle at the reference point (= a)
    FiberClass c2{0, 0};  // class of the fibration-2 circle transported to a
};

// Transports the b-side class to the reference end along monodromy_path.
// Throws DataError when the two circles are proportional and neither is
// trivial (the union does not span H1, so the total space is not a sphere).
FiberedSphere build_sphere(const EllipticFibration& f1, const EllipticFibration& f2,
                           const BaseArc& arc);

// Sum over recorded crossings of sign * <c1,c1'> * <c2,c2'>. Arcs must be
// transverse: shared endpoints are an error, and the two arcs' crossing lists
// must be mutually consistent (equal multiplicity, opposite signs).
Integer sphere_pairing(const FiberedSphere& s1, const FiberedSphere& s2);

// True exactly under the bounding-chain hypotheses: the first fibration's
// vanishing cycle at the start is homotopically trivial AND the second
// fibration's circle is trivial at the reference end. Conservative otherwise.
bool is_null_homologous(const FiberedSphere& s, const EllipticFibration& f1,
                        const EllipticFibration& f2);

// Export a family of fibered spheres as a cycle configuration: class vectors
// are pairing rows against the family, disjointness = no crossings and
// distinct endpoints.
CycleConfiguration fibered_configuration(const EllipticFibration& f1,
                                         const EllipticFibration& f2,
                                         const std::vector<BaseArc>& arcs);

}  // namespace conifold
