#pragma once

#include "conifold/matrix.hpp"
#include "conifold/relations.hpp"
#include "conifold/surgery.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace conifold {

// ---------------------------------------------------------------------------
// The pencil member {x1^5 + ... + x5^5 = lambda * x1*...*x5} for a generic
// lambda in (0,5) carries 625 piecewise-smooth Lagrangian 3-spheres, swept by
// phase-constrained projective points: each of x1..x4 confined to a rotated
// positive ray alpha^m * (0,inf) (alpha = exp(2*pi*i/5)) or pinned to 0, and
// x5 solved as one of five branches of the degree-5 root. The combinatorics
// below is independent of lambda on (0,5) (no branch collisions there; see
// real_solution_check).
// ---------------------------------------------------------------------------

// Constraint slot value: 0..4 = ray alpha^m*(0,inf); kZeroSlot = pinned to 0.
inline constexpr int kZeroSlot = -1;

struct PhaseCell {
    int branch = 0;               // x5 root choice, Z/5
    std::array<int, 4> ray{};     // per-slot constraint for x1..x4
};

// Dimension of the projective stratum: nonzero slots minus one (overall
// positive rescaling), -1 for the empty system.
int cell_dimension(const PhaseCell& cell);

struct SignedCell {
    PhaseCell cell;
    int sign = 1;
};

// Projective symmetry (i1,...,i5), sum = 0 mod 5, acting by xj -> alpha^{ij} xj.
struct GroupElement {
    std::array<int, 5> i{};
};
void validate(const GroupElement& g);

// Cycle label (k; i1..i4), sum(i) = 0 mod 5: the branch-k base sphere
// translated by the group element with those first four exponents.
struct CycleLabel {
    int k = 0;
    std::array<int, 4> i{};

    bool operator==(const CycleLabel&) const = default;
};

// Labels are in bijection with (Z/5)^4 via u_j = i_j - k (mod 5); k = sum(u).
// The pairing depends on labels only through differences of u.
std::array<int, 4> label_to_u(const CycleLabel& label);
CycleLabel u_to_label(const std::array<int, 4>& u);
int label_index(const CycleLabel& label);     // (((k*5+i1)*5+i2)*5+i3), 0..624
CycleLabel label_from_index(int index);
std::string label_string(const CycleLabel& label);

struct QuinticCycle {
    CycleLabel label;
    std::vector<SignedCell> cells;  // 16 top cells, signs +-1
};

// All 625 cycles in label_index order. Cell list of (k; i): for each choice
// d in {0,1}^4 the cell with rays i_j + d_j (mod 5), branch k, sign
// (-1)^{|d|}. The d_4 = 0 half and the d_4 = 1 half are the two solid tori of
// the genus-marked decomposition; together they close up to a 3-sphere
// (boundary_vanishes and euler characteristic checks below).
std::vector<QuinticCycle> generate_cycles();

// Branch index of the x5 root after acting by g: phases multiply by
// alpha^{i5}.
int branch_transport(int k, const GroupElement& g);

// Translate of a label under g (normalized back to sum(i) = 0 form).
CycleLabel act(const GroupElement& g, const CycleLabel& label);

// True iff the two constraint systems share no projective point, where a
// shared point means: the open stratum of one satisfies the closure of the
// other (in either direction). Ray labels are compared after aligning the
// branch indices with a diagonal relabeling (multiplying every coordinate by
// the same fifth root of unity changes nothing geometrically).
bool cells_disjoint(const PhaseCell& c1, const PhaseCell& c2);

// All closure strata of a cycle (80 = 16 + 32 + 24 + 8 cells of dims 3..0).
std::vector<PhaseCell> closure_strata(const QuinticCycle& cycle);

// Combinatorial boundary of the 16-cell chain cancels exactly.
bool boundary_vanishes(const QuinticCycle& cycle);

// Euler characteristic of the closure complex; 0 for a 3-sphere.
int complex_euler_characteristic(const QuinticCycle& cycle);

// Integer offsets (one per slot and relative ray position, 20 distinct values)
// steering the infinitesimal perturbation that isolates intersections of two
// cycles at shared vertices. Any profile with distinct entries yields the same
// matrix; invariance is property-tested.
struct OffsetProfile {
    std::array<std::array<int, 5>, 4> beta{};
    static OffsetProfile standard();
    static OffsetProfile sampled(std::uint64_t seed);
};
void validate(const OffsetProfile& profile);

// Signed count of intersection points of cycles x and y after the offset
// perturbation of y, as a function of e = u(y) - u(x) (mod 5). Values lie in
// {-1, 0, +1}; antisymmetric under e -> -e; zero when some slot has
// e_j in {2, 3} (the cycles are then disjoint) and when sum(e) = 0 mod 5.
int pairing_of_difference(const std::array<int, 4>& e, const OffsetProfile& profile);

// Same value computed the long way for two explicit cycles: enumerate shared
// vertices from the closure strata and sum the local crossing products.
int pairing_of_cycles(const QuinticCycle& x, const QuinticCycle& y, const OffsetProfile& profile);

// Whether the full cycles share any projective point (equivalently, a vertex).
bool cycles_share_points(const QuinticCycle& x, const QuinticCycle& y);

// 625 x 625 antisymmetric intersection matrix, rows/cols in label_index order.
// lambda is validated to lie in (0,5) and does not affect the entries there.
IntegerMatrix pairing_matrix(const std::vector<QuinticCycle>& cycles, double lambda = 1.0,
                             const OffsetProfile& profile = OffsetProfile::standard(),
                             int threads = 1);

// The 125 nodes of the lambda = 5 member are the symmetry orbit of
// [1:1:1:1:1]; the vanishing sphere at node (c1..c4) is homologous to the
// branch-1 cycle translated by c, so its class row (against the 625 spanning
// cycles) is that cycle's pairing row. All 125 are pairwise disjoint: they
// retract into disjoint balls around distinct nodes.
struct VanishingClasses {
    std::vector<std::array<int, 4>> nodes;    // (c1..c4), sum = 0 mod 5
    std::vector<std::string> labels;
    std::vector<int> spanning_index;          // label_index of the homologous cycle
    IntegerMatrix classes;                    // 125 x 625
};
VanishingClasses vanishing_classes(const IntegerMatrix& pairing);

// 125-row configuration of the vanishing classes (complete disjointness).
CycleConfiguration vanishing_configuration(const IntegerMatrix& pairing);

// Full emitted configuration: 625 spanning rows + 125 vanishing rows. Class
// vectors are pairing rows against the 625 spanning cycles; disjointness is
// the 16-partner relation among spanning cycles plus the complete relation
// among vanishing rows.
CycleConfiguration quintic_configuration(double lambda = 1.0,
                                         const OffsetProfile& profile = OffsetProfile::standard(),
                                         int threads = 1);

// Whether 5^5 (x1^5+..+x4^5)^4 = 4^4 lambda^5 (x1..x4)^5 admits a positive
// real solution: false for lambda < 5, true for lambda >= 5 (power-mean bound,
// witness x = (1,1,1,1) at lambda = 5).
bool real_solution_check(double lambda);

// Smooth quintic 3-fold invariants: the starting point of the surgery table.
SixManifoldTopology quintic_topology();

struct PropositionRow {
    int size = 0;
    bool found = false;
    int span = 0;
    long long b2 = 0;
    long long b3 = 0;
    std::vector<int> subset;            // indices into the vanishing rows
    std::vector<Integer> relation;
};

struct PropositionReport {
    int pairing_rank = 0;               // rank of the 625 x 625 matrix
    int vanishing_span = 0;             // span of the 125 vanishing rows
    std::vector<PropositionRow> table;  // sizes 102..125
    bool pass = false;                  // every row found with span 101, rank 204
    std::vector<std::string> notes;
};

// Runs the disjoint-good-subset search over the vanishing configuration for
// every size in [102, 125] and feeds (n = size, r = span) through
// conifold_transition on the quintic topology.
PropositionReport reproduce_proposition(std::uint64_t seed,
                                        const OffsetProfile& profile = OffsetProfile::standard(),
                                        int threads = 1);

}  // namespace conifold
