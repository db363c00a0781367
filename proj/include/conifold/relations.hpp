#pragma once

#include "conifold/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conifold {

struct Provenance {
    std::string generator;
    std::vector<std::pair<std::string, std::string>> parameters;  // sorted by key
    std::string input_digest;

    bool operator==(const Provenance&) const = default;
};

// A finite family of labeled 3-sphere classes: one class row per label,
// an optional antisymmetric intersection pairing, and a symmetric irreflexive
// disjointness relation stored as sorted adjacency lists.
struct CycleConfiguration {
    std::vector<std::string> labels;
    IntegerMatrix classes;
    std::optional<IntegerMatrix> pairing;
    std::vector<std::vector<int>> disjoint;
    Provenance provenance;

    std::size_t size() const { return labels.size(); }
};

// Throws DataError on any violated structural invariant: row counts, pairing
// antisymmetry and zero diagonal, adjacency symmetry/irreflexivity/sortedness,
// and pairing[i][j] == 0 whenever i,j are declared disjoint.
void validate(const CycleConfiguration& config);

bool cycles_disjoint(const CycleConfiguration& config, int i, int j);

// An integer relation sum(coefficients[t] * classes[subset[t]]) = 0 with every
// coefficient nonzero; coefficients primitive, first nonzero positive.
struct GoodRelation {
    std::vector<int> subset;  // sorted indices
    std::vector<Integer> coefficients;
};

// Throws DataError on bad relation data; throws VerificationError if the
// relation does not re-verify against the classes by direct multiplication.
void verify_relation(const CycleConfiguration& config, const GoodRelation& rel);

// True iff a full-support integer relation exists on the subset, computed as:
// every member row lies in the rational span of the other member rows.
bool is_good_subset(const CycleConfiguration& config, const std::vector<int>& subset);

// Deterministic full-support relation witness, or nullopt when the subset is
// not good. Built by accumulating kernel-basis vectors with the smallest
// multipliers (1, 2, ...) that keep all covered coordinates nonzero.
std::optional<GoodRelation> good_relation(const CycleConfiguration& config,
                                          const std::vector<int>& subset);

int span_dim(const CycleConfiguration& config, const std::vector<int>& subset);

struct SearchResult {
    int size = 0;
    bool found = false;
    std::vector<int> subset;
    int span = 0;
    std::vector<Integer> relation;
};

struct SearchReport {
    std::uint64_t seed = 0;
    int size_min = 0;
    int size_max = 0;
    long long moves_used = 0;
    std::vector<SearchResult> results;  // one per size, ascending
    std::vector<std::string> notes;
};

// For each size k in [size_min, size_max]: the best pairwise-disjoint good
// subset found, maximizing span_dim, ties broken lexicographically by index
// order. Exhaustive when the configuration has at most 20 cycles; otherwise a
// seeded greedy construction with randomized repair inside the move budget.
// Absence of a subset is reported per size ("none found"), never asserted as
// impossibility.
SearchReport search_good_subsets(const CycleConfiguration& config, int size_min, int size_max,
                                 std::uint64_t seed, long long move_budget = 100000);

}  // namespace conifold
