#include "conifold/fibered.hpp"

#include <algorithm>
#include <utility>

namespace conifold {

namespace {

Integer int_abs(const Integer& v) { return v < 0 ? Integer(-v) : v; }

bool is_primitive(const FiberClass& c) {
    if (c[0] == 0 && c[1] == 0) return false;
    return gcd(int_abs(c[0]), int_abs(c[1])) == 1;
}

bool is_normalized(const BasePoint& pt) {
    if (pt.p == 0 && pt.q == 0) return false;
    if (gcd(int_abs(pt.p), int_abs(pt.q)) != 1) return false;
    return pt.p != 0 ? pt.p > 0 : pt.q > 0;
}

const CriticalValue& critical_at(const EllipticFibration& f, int index,
                                 const char* which) {
    if (index < 0 || static_cast<std::size_t>(index) >= f.critical_values.size())
        throw DataError(std::string("critical value index out of range for ") + which);
    return f.critical_values[static_cast<std::size_t>(index)];
}

}  // namespace

BasePoint normalized(Integer p, Integer q) {
    if (p == 0 && q == 0) throw DataError("base point cannot be [0:0]");
    Integer g = gcd(int_abs(p), int_abs(q));
    p /= g;
    q /= g;
    if (p < 0 || (p == 0 && q < 0)) {
        p = -p;
        q = -q;
    }
    return BasePoint{std::move(p), std::move(q)};
}

std::string to_string(const BasePoint& pt) {
    return "[" + pt.p.str() + ":" + pt.q.str() + "]";
}

BasePoint apply(const MoebiusMap& f, const BasePoint& pt) {
    const auto& m = f.m;
    Integer det = m[0] * m[3] - m[1] * m[2];
    if (det != 1 && det != -1)
        throw DataError("Moebius map must have determinant +-1");
    return normalized(m[0] * pt.p + m[1] * pt.q, m[2] * pt.p + m[3] * pt.q);
}

Integer fiber_pairing(const FiberClass& c, const FiberClass& d) {
    return c[0] * d[1] - c[1] * d[0];
}

void validate(const EllipticFibration& f) {
    for (std::size_t i = 0; i < f.critical_values.size(); ++i) {
        const CriticalValue& cv = f.critical_values[i];
        if (!is_normalized(cv.position))
            throw DataError("critical value position must be a normalized [p:q] pair");
        for (std::size_t j = 0; j < i; ++j)
            if (f.critical_values[j].position == cv.position)
                throw DataError("critical values must be pairwise distinct");
        if (cv.homotopically_trivial) {
            if (cv.vanishing_class[0] != 0 || cv.vanishing_class[1] != 0)
                throw DataError(
                    "a homotopically trivial vanishing class must be recorded as zero");
        } else if (!is_primitive(cv.vanishing_class)) {
            throw DataError("a nodal vanishing class must be primitive");
        }
    }
}

EllipticFibration transported(const EllipticFibration& f, const MoebiusMap& map) {
    EllipticFibration moved = f;
    for (CriticalValue& cv : moved.critical_values) cv.position = apply(map, cv.position);
    validate(moved);
    return moved;
}

std::vector<BasePoint> validate_fibre_product(const EllipticFibration& f1,
                                              const EllipticFibration& f2) {
    validate(f1);
    validate(f2);
    std::vector<BasePoint> nodes;
    for (const CriticalValue& cv : f1.critical_values)
        for (const CriticalValue& other : f2.critical_values)
            if (cv.position == other.position) {
                nodes.push_back(cv.position);
                break;
            }
    return nodes;
}

FiberClass picard_lefschetz_transport(const FiberClass& c, const FiberClass& v) {
    if (v[0] == 0 && v[1] == 0) return c;
    if (!is_primitive(v))
        throw DataError("vanishing class of a transport step must be primitive or zero");
    Integer twist = fiber_pairing(c, v);
    return {c[0] + twist * v[0], c[1] + twist * v[1]};
}

std::array<Integer, 4> total_monodromy(const EllipticFibration& f) {
    validate(f);
    // transvection of v as a matrix on column vectors, composed in list order
    std::array<Integer, 4> total{1, 0, 0, 1};
    for (const CriticalValue& cv : f.critical_values) {
        const FiberClass& v = cv.vanishing_class;
        std::array<Integer, 4> step{1 + v[0] * v[1], -v[0] * v[0],  //
                                    v[1] * v[1], 1 - v[0] * v[1]};
        std::array<Integer, 4> next;
        next[0] = step[0] * total[0] + step[1] * total[2];
        next[1] = step[0] * total[1] + step[1] * total[3];
        next[2] = step[2] * total[0] + step[3] * total[2];
        next[3] = step[2] * total[1] + step[3] * total[3];
        total = next;
    }
    return total;
}

FiberedSphere build_sphere(const EllipticFibration& f1, const EllipticFibration& f2,
                           const BaseArc& arc) {
    std::vector<BasePoint> nodes = validate_fibre_product(f1, f2);
    const CriticalValue& a = critical_at(f1, arc.a_index, "the first fibration");
    const CriticalValue& b = critical_at(f2, arc.b_index, "the second fibration");
    for (const BasePoint& node : nodes)
        if (node == a.position || node == b.position)
            throw DataError("arc endpoints must avoid the nodes of the fibre product");

    FiberedSphere sphere;
    sphere.arc = arc;
    sphere.c1 = a.vanishing_class;
    sphere.c2 = b.vanishing_class;
    for (const MonodromyStep& step : arc.monodromy_path) {
        const EllipticFibration* f = nullptr;
        if (step.fibration == 1) f = &f1;
        if (step.fibration == 2) f = &f2;
        if (f == nullptr)
            throw DataError("monodromy step must name fibration 1 or 2");
        const CriticalValue& around = critical_at(*f, step.index, "a monodromy step");
        sphere.c2 = picard_lefschetz_transport(sphere.c2, around.vanishing_class);
    }

    if (!a.homotopically_trivial && !b.homotopically_trivial &&
        fiber_pairing(sphere.c1, sphere.c2) == 0)
        throw DataError("not a sphere: collapsing circles do not span H1(T^2)");
    return sphere;
}

Integer sphere_pairing(const FiberedSphere& s1, const FiberedSphere& s2) {
    if (s1.arc.id != s2.arc.id &&
        (s1.arc.a_index == s2.arc.a_index || s1.arc.b_index == s2.arc.b_index))
        throw DataError("non-transverse configuration");

    // both arcs must record the same crossings, with opposite signs
    std::vector<int> here, there;
    for (const ArcCrossing& c : s1.arc.crossings)
        if (c.other_arc == s2.arc.id) here.push_back(c.sign);
    for (const ArcCrossing& c : s2.arc.crossings)
        if (c.other_arc == s1.arc.id) there.push_back(-c.sign);
    if (s1.arc.id != s2.arc.id) {
        std::vector<int> a = here, b = there;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) throw DataError("crossing records of the two arcs disagree");
    }

    Integer fibre_factor =
        fiber_pairing(s1.c1, s2.c1) * fiber_pairing(s1.c2, s2.c2);
    Integer total = 0;
    for (int sign : here) total += sign * fibre_factor;
    return total;
}

bool is_null_homologous(const FiberedSphere& s, const EllipticFibration& f1,
                        const EllipticFibration& f2) {
    validate(f1);
    validate(f2);
    const CriticalValue& a = critical_at(f1, s.arc.a_index, "the first fibration");
    // both circles must die: the start circle by hypothesis, the transported
    // end circle as recorded in the sphere itself
    return a.homotopically_trivial && s.c2[0] == 0 && s.c2[1] == 0;
}

CycleConfiguration fibered_configuration(const EllipticFibration& f1,
                                         const EllipticFibration& f2,
                                         const std::vector<BaseArc>& arcs) {
    std::vector<FiberedSphere> spheres;
    spheres.reserve(arcs.size());
    for (const BaseArc& arc : arcs) spheres.push_back(build_sphere(f1, f2, arc));

    const std::size_t n = spheres.size();
    CycleConfiguration config;
    for (const BaseArc& arc : arcs) config.labels.push_back("arc" + std::to_string(arc.id));

    IntegerMatrix pairing(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) pairing.at(i, j) = sphere_pairing(spheres[i], spheres[j]);
    config.classes = pairing;
    config.pairing = std::move(pairing);

    config.disjoint.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            bool crossed = false;
            for (const ArcCrossing& c : arcs[i].crossings)
                if (c.other_arc == arcs[j].id) crossed = true;
            if (!crossed && arcs[i].a_index != arcs[j].a_index &&
                arcs[i].b_index != arcs[j].b_index)
                config.disjoint[i].push_back(static_cast<int>(j));
        }

    config.provenance.generator = "fibered";
    config.provenance.parameters = {{"arcs", std::to_string(n)}};
    validate(config);
    return config;
}

}  // namespace conifold
