// Good relations among sphere classes.
//
// A subset is "good" when its class rows admit an integer relation with every
// coefficient nonzero. Three different routes to that fact live here on
// purpose: the membership test uses per-element row-span checks, the witness
// builder uses a canonical kernel basis, and the search maintains kernels
// incrementally while it shrinks a candidate set. They agree mathematically
// (over the rationals a full-support kernel vector exists iff every element
// is covered by some kernel vector); keeping the routes separate lets the
// tests play them against each other.

#include "conifold/relations.hpp"

#include "conifold/rng.hpp"
#include "conifold/zlinalg.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conifold {

namespace {

std::vector<int> sorted_checked_subset(const CycleConfiguration& config,
                                       const std::vector<int>& subset, bool allow_empty) {
    if (subset.empty() && !allow_empty) throw DataError("subset is empty");
    std::vector<int> s = subset;
    std::sort(s.begin(), s.end());
    for (std::size_t t = 0; t < s.size(); ++t) {
        if (s[t] < 0 || static_cast<std::size_t>(s[t]) >= config.size())
            throw DataError("subset index out of range");
        if (t > 0 && s[t] == s[t - 1]) throw DataError("subset index repeated");
    }
    return s;
}

// Restrict the class matrix to its pivot columns once, so that repeated rank
// work on row subsets runs at kernel width instead of full class width. The
// projection is injective on the row space, so ranks and relation lattices of
// every row subset are preserved.
IntegerMatrix compressed_classes(const IntegerMatrix& classes) {
    if (classes.cols <= 1) return classes;
    return take_cols(classes, pivot_columns(classes));
}

bool kernel_covers_all(const std::vector<std::vector<Integer>>& kernel, std::size_t width) {
    if (kernel.empty()) return width == 0;
    for (std::size_t c = 0; c < width; ++c) {
        bool covered = false;
        for (const auto& row : kernel)
            if (row[c] != 0) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

// Accumulate the kernel basis into one vector whose support is the union of
// the row supports: add each basis row with the smallest multiplier 1, 2, ...
// that cancels nothing already gained.
std::vector<Integer> full_support_sweep(const std::vector<std::vector<Integer>>& kernel) {
    std::vector<Integer> w = kernel.front();
    for (std::size_t j = 1; j < kernel.size(); ++j) {
        const std::vector<Integer>& v = kernel[j];
        Integer m = 1;
        while (true) {
            bool cancels = false;
            for (std::size_t c = 0; c < w.size(); ++c)
                if (v[c] != 0 && w[c] + m * v[c] == 0) {
                    cancels = true;
                    break;
                }
            if (!cancels) break;
            m += 1;
        }
        for (std::size_t c = 0; c < w.size(); ++c) w[c] += m * v[c];
    }
    return primitive_normalized(std::move(w));
}

std::vector<std::vector<Integer>> kernel_rows(const IntegerMatrix& classes,
                                              const std::vector<int>& subset) {
    IntegerMatrix k = kernel_basis(take_rows(classes, subset));
    std::vector<std::vector<Integer>> rows;
    rows.reserve(k.rows);
    for (std::size_t r = 0; r < k.rows; ++r) rows.push_back(k.row(r));
    return rows;
}

bool subset_pairwise_disjoint(const CycleConfiguration& config, const std::vector<int>& subset) {
    for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = a + 1; b < subset.size(); ++b)
            if (!cycles_disjoint(config, subset[a], subset[b])) return false;
    return true;
}

}  // namespace

void validate(const CycleConfiguration& config) {
    const std::size_t n = config.size();
    if (config.classes.rows != n) throw DataError("class row count differs from label count");

    if (config.pairing) {
        const IntegerMatrix& p = *config.pairing;
        if (p.rows != n || p.cols != n) throw DataError("pairing matrix is not n x n");
        for (std::size_t i = 0; i < n; ++i) {
            if (p.at(i, i) != 0) throw DataError("pairing diagonal entry is nonzero");
            for (std::size_t j = i + 1; j < n; ++j)
                if (p.at(i, j) != -p.at(j, i)) throw DataError("pairing is not antisymmetric");
        }
    }

    if (config.disjoint.size() != n) throw DataError("adjacency row count differs from label count");
    for (std::size_t i = 0; i < n; ++i) {
        const auto& adj = config.disjoint[i];
        for (std::size_t t = 0; t < adj.size(); ++t) {
            int j = adj[t];
            if (j < 0 || static_cast<std::size_t>(j) >= n)
                throw DataError("adjacency entry out of range");
            if (static_cast<std::size_t>(j) == i) throw DataError("cycle declared disjoint from itself");
            if (t > 0 && adj[t] <= adj[t - 1]) throw DataError("adjacency list not sorted strictly");
            const auto& back = config.disjoint[static_cast<std::size_t>(j)];
            if (!std::binary_search(back.begin(), back.end(), static_cast<int>(i)))
                throw DataError("disjointness relation is not symmetric");
            if (config.pairing && config.pairing->at(i, static_cast<std::size_t>(j)) != 0)
                throw DataError("disjoint pair has nonzero pairing");
        }
    }
}

bool cycles_disjoint(const CycleConfiguration& config, int i, int j) {
    if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= config.size() ||
        static_cast<std::size_t>(j) >= config.size())
        throw DataError("cycle index out of range");
    if (i == j) return false;
    const auto& adj = config.disjoint[static_cast<std::size_t>(i)];
    return std::binary_search(adj.begin(), adj.end(), j);
}

void verify_relation(const CycleConfiguration& config, const GoodRelation& rel) {
    if (rel.subset.empty()) throw DataError("relation subset is empty");
    if (rel.subset.size() != rel.coefficients.size())
        throw DataError("coefficient count differs from subset size");
    for (std::size_t t = 0; t < rel.subset.size(); ++t) {
        int i = rel.subset[t];
        if (i < 0 || static_cast<std::size_t>(i) >= config.size())
            throw DataError("relation index out of range");
        if (t > 0 && rel.subset[t] <= rel.subset[t - 1])
            throw DataError("relation subset not sorted strictly");
        if (rel.coefficients[t] == 0) throw DataError("relation coefficient is zero");
    }
    for (std::size_t c = 0; c < config.classes.cols; ++c) {
        Integer s = 0;
        for (std::size_t t = 0; t < rel.subset.size(); ++t)
            s += rel.coefficients[t] * config.classes.at(static_cast<std::size_t>(rel.subset[t]), c);
        if (s != 0) throw VerificationError("relation does not sum to zero");
    }
}

bool is_good_subset(const CycleConfiguration& config, const std::vector<int>& subset) {
    std::vector<int> s = sorted_checked_subset(config, subset, false);
    IntegerMatrix rows = compressed_classes(take_rows(config.classes, s));
    const int full = rank_exact(rows);
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<int> keep;
        for (std::size_t t = 0; t < s.size(); ++t)
            if (t != drop) keep.push_back(static_cast<int>(t));
        IntegerMatrix rest(keep.size(), rows.cols);
        for (std::size_t t = 0; t < keep.size(); ++t)
            for (std::size_t c = 0; c < rows.cols; ++c)
                rest.at(t, c) = rows.at(static_cast<std::size_t>(keep[t]), c);
        // row `drop` lies in the span of the others iff removing it keeps rank
        if (rank_exact(rest) != full) return false;
    }
    return true;
}

std::optional<GoodRelation> good_relation(const CycleConfiguration& config,
                                          const std::vector<int>& subset) {
    std::vector<int> s = sorted_checked_subset(config, subset, false);
    IntegerMatrix rows = compressed_classes(take_rows(config.classes, s));
    std::vector<std::vector<Integer>> kernel;
    {
        IntegerMatrix k = kernel_basis(rows);
        for (std::size_t r = 0; r < k.rows; ++r) kernel.push_back(k.row(r));
    }
    if (kernel.empty() || !kernel_covers_all(kernel, s.size())) return std::nullopt;
    return GoodRelation{std::move(s), full_support_sweep(kernel)};
}

int span_dim(const CycleConfiguration& config, const std::vector<int>& subset) {
    std::vector<int> s = sorted_checked_subset(config, subset, true);
    if (s.empty()) return 0;
    return rank_exact(take_rows(config.classes, s));
}

namespace {

// ---------------------------------------------------------------------------
// Search internals
// ---------------------------------------------------------------------------

struct SearchState {
    const CycleConfiguration& config;
    IntegerMatrix classes;  // pivot-compressed copy
    SearchReport report;
    int size_min;
    int size_max;
    long long move_budget;

    SearchState(const CycleConfiguration& c, int kmin, int kmax, std::uint64_t seed,
                long long budget)
        : config(c), classes(compressed_classes(c.classes)), size_min(kmin), size_max(kmax),
          move_budget(budget) {
        report.seed = seed;
        report.size_min = kmin;
        report.size_max = kmax;
        for (int k = kmin; k <= kmax; ++k) {
            SearchResult r;
            r.size = k;
            report.results.push_back(std::move(r));
        }
    }

    SearchResult& slot(int k) { return report.results[static_cast<std::size_t>(k - size_min)]; }

    bool in_range(int k) const { return k >= size_min && k <= size_max; }

    void record(const std::vector<int>& subset, int span,
                const std::vector<std::vector<Integer>>& kernel) {
        const int k = static_cast<int>(subset.size());
        if (!in_range(k)) return;
        SearchResult& r = slot(k);
        if (r.found && (r.span > span || (r.span == span && r.subset <= subset))) return;
        r.found = true;
        r.subset = subset;
        r.span = span;
        r.relation = full_support_sweep(kernel);
    }
};

void exhaustive_search(SearchState& st) {
    const std::size_t n = st.config.size();
    for (int k = st.size_min; k <= st.size_max; ++k) {
        std::vector<int> sel(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) sel[static_cast<std::size_t>(i)] = i;
        while (true) {
            ++st.report.moves_used;
            if (subset_pairwise_disjoint(st.config, sel)) {
                std::vector<std::vector<Integer>> kernel = kernel_rows(st.classes, sel);
                if (!kernel.empty() && kernel_covers_all(kernel, sel.size()))
                    st.record(sel, static_cast<int>(sel.size() - kernel.size()), kernel);
            }
            // next k-combination in lexicographic order
            int i = k;
            while (i > 0 &&
                   sel[static_cast<std::size_t>(i - 1)] == static_cast<int>(n) - k + i - 1)
                --i;
            if (i == 0) break;
            ++sel[static_cast<std::size_t>(i - 1)];
            for (int j = i; j < k; ++j)
                sel[static_cast<std::size_t>(j)] = sel[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    st.report.notes.push_back("exhaustive enumeration");
}

// Eliminate one coordinate from a kernel basis: pivot on a row that is
// nonzero there, combine it away from the others, drop pivot row and column.
// When no row touches the coordinate the basis only loses the zero column.
std::vector<std::vector<Integer>> restrict_kernel(const std::vector<std::vector<Integer>>& kernel,
                                                  std::size_t pos) {
    std::size_t pivot = kernel.size();
    for (std::size_t r = 0; r < kernel.size(); ++r) {
        if (kernel[r][pos] == 0) continue;
        if (pivot == kernel.size()) {
            pivot = r;
            continue;
        }
        Integer a = kernel[pivot][pos] < 0 ? Integer(-kernel[pivot][pos]) : kernel[pivot][pos];
        Integer b = kernel[r][pos] < 0 ? Integer(-kernel[r][pos]) : kernel[r][pos];
        if (b < a) pivot = r;
    }
    std::vector<std::vector<Integer>> out;
    out.reserve(kernel.size());
    for (std::size_t r = 0; r < kernel.size(); ++r) {
        if (r == pivot) continue;
        std::vector<Integer> row;
        row.reserve(kernel[r].size() - 1);
        if (pivot == kernel.size() || kernel[r][pos] == 0) {
            for (std::size_t c = 0; c < kernel[r].size(); ++c)
                if (c != pos) row.push_back(kernel[r][c]);
        } else {
            const Integer& pv = kernel[pivot][pos];
            const Integer& rv = kernel[r][pos];
            for (std::size_t c = 0; c < kernel[r].size(); ++c)
                if (c != pos) row.push_back(pv * kernel[r][c] - rv * kernel[pivot][c]);
            row = primitive_normalized(std::move(row));
        }
        out.push_back(std::move(row));
    }
    return out;
}

// Greedy maximal pairwise-disjoint set, preferring elements that enlarge the
// running span, lexicographically first on ties.
std::vector<int> greedy_clique(const CycleConfiguration& config, const IntegerMatrix& classes) {
    const std::size_t n = config.size();
    std::vector<bool> used(n, false);
    std::vector<int> clique;
    std::vector<std::vector<Integer>> echelon;  // weak echelon, distinct leading columns

    auto reduce = [&](std::vector<Integer> row) {
        for (const auto& e : echelon) {
            std::size_t lead = 0;
            while (lead < e.size() && e[lead] == 0) ++lead;
            if (row[lead] == 0) continue;
            Integer a = e[lead], b = row[lead];
            for (std::size_t c = 0; c < row.size(); ++c) row[c] = a * row[c] - b * e[c];
            row = primitive_normalized(std::move(row));
        }
        return row;
    };
    auto is_zero = [](const std::vector<Integer>& row) {
        for (const auto& x : row)
            if (x != 0) return false;
        return true;
    };

    while (true) {
        int pick = -1;
        std::vector<Integer> pick_reduced;
        for (std::size_t i = 0; i < n; ++i) {
            if (used[i]) continue;
            bool compatible = true;
            for (int j : clique)
                if (!cycles_disjoint(config, static_cast<int>(i), j)) {
                    compatible = false;
                    break;
                }
            if (!compatible) continue;
            std::vector<Integer> reduced = reduce(classes.row(i));
            if (!is_zero(reduced)) {
                pick = static_cast<int>(i);
                pick_reduced = std::move(reduced);
                break;
            }
            if (pick == -1) pick = static_cast<int>(i);
        }
        if (pick == -1) break;
        used[static_cast<std::size_t>(pick)] = true;
        clique.push_back(pick);
        if (!pick_reduced.empty() && !is_zero(pick_reduced)) {
            auto lead_of = [](const std::vector<Integer>& row) {
                std::size_t l = 0;
                while (l < row.size() && row[l] == 0) ++l;
                return l;
            };
            std::size_t lead = lead_of(pick_reduced);
            auto it = echelon.begin();
            while (it != echelon.end() && lead_of(*it) < lead) ++it;
            echelon.insert(it, std::move(pick_reduced));
        }
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

void heuristic_search(SearchState& st, std::uint64_t seed) {
    std::vector<int> clique = greedy_clique(st.config, st.classes);
    std::vector<std::vector<Integer>> kernel = kernel_rows(st.classes, clique);

    // good core of the clique: elements touched by some kernel vector; the
    // untouched ones can never carry a nonzero coefficient, so drop them
    std::vector<int> s;
    std::vector<std::size_t> keep_cols;
    for (std::size_t t = 0; t < clique.size(); ++t) {
        bool covered = false;
        for (const auto& row : kernel)
            if (row[t] != 0) {
                covered = true;
                break;
            }
        if (covered) {
            s.push_back(clique[t]);
            keep_cols.push_back(t);
        }
    }
    for (auto& row : kernel) {
        std::vector<Integer> packed;
        packed.reserve(keep_cols.size());
        for (std::size_t c : keep_cols) packed.push_back(row[c]);
        row = std::move(packed);
    }
    st.report.notes.push_back("greedy disjoint set of size " + std::to_string(clique.size()) +
                              ", good core of size " + std::to_string(s.size()));
    if (kernel.empty() || s.empty()) {
        st.report.notes.push_back("no good subset reachable from the greedy set");
        return;
    }

    const int span = static_cast<int>(s.size() - kernel.size());
    st.record(s, span, kernel);

    Rng rng(seed);
    while (static_cast<int>(s.size()) > st.size_min) {
        if (st.report.moves_used >= st.move_budget) {
            st.report.notes.push_back("move budget exhausted at size " + std::to_string(s.size()));
            return;
        }
        if (kernel.size() <= 1) {
            st.report.notes.push_back("kernel dimension 1 reached at size " +
                                      std::to_string(s.size()) +
                                      "; smaller sizes not reachable by removal");
            return;
        }

        // deterministic pass: remove the first element that keeps the set good
        bool removed = false;
        for (std::size_t pos = 0; pos < s.size(); ++pos) {
            ++st.report.moves_used;
            std::vector<std::vector<Integer>> next = restrict_kernel(kernel, pos);
            if (!next.empty() && kernel_covers_all(next, s.size() - 1)) {
                kernel = std::move(next);
                s.erase(s.begin() + static_cast<std::ptrdiff_t>(pos));
                st.record(s, static_cast<int>(s.size() - kernel.size()), kernel);
                removed = true;
                break;
            }
        }
        if (removed) continue;

        // randomized repair: drop a random element, then shed everything the
        // kernel no longer touches, and try to climb back by re-insertion
        const int failed_size = static_cast<int>(s.size());
        std::size_t pos = static_cast<std::size_t>(rng.below(s.size()));
        ++st.report.moves_used;
        kernel = restrict_kernel(kernel, pos);
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(pos));
        while (!kernel.empty()) {
            std::size_t uncovered = s.size();
            for (std::size_t c = 0; c < s.size(); ++c) {
                bool covered = false;
                for (const auto& row : kernel)
                    if (row[c] != 0) {
                        covered = true;
                        break;
                    }
                if (!covered) {
                    uncovered = c;
                    break;
                }
            }
            if (uncovered == s.size()) break;
            kernel = restrict_kernel(kernel, uncovered);  // column is zero, row count kept
            s.erase(s.begin() + static_cast<std::ptrdiff_t>(uncovered));
        }
        if (kernel.empty() || s.empty()) {
            st.report.notes.push_back("descent collapsed below size " +
                                      std::to_string(st.size_min));
            return;
        }
        st.record(s, static_cast<int>(s.size() - kernel.size()), kernel);

        // re-insert compatible spanned elements while sizes below the failure
        // point are still open
        bool grew = true;
        while (grew && static_cast<int>(s.size()) + 1 < failed_size &&
               st.report.moves_used < st.move_budget) {
            grew = false;
            for (std::size_t x = 0; x < st.config.size() && !grew; ++x) {
                int xi = static_cast<int>(x);
                if (std::binary_search(s.begin(), s.end(), xi)) continue;
                bool compatible = true;
                for (int j : s)
                    if (!cycles_disjoint(st.config, xi, j)) {
                        compatible = false;
                        break;
                    }
                if (!compatible) continue;
                ++st.report.moves_used;
                std::vector<int> candidate = s;
                candidate.insert(std::upper_bound(candidate.begin(), candidate.end(), xi), xi);
                std::vector<std::vector<Integer>> next = kernel_rows(st.classes, candidate);
                if (next.empty() || !kernel_covers_all(next, candidate.size())) continue;
                s = std::move(candidate);
                kernel = std::move(next);
                st.record(s, static_cast<int>(s.size() - kernel.size()), kernel);
                grew = true;
            }
        }
    }
}

}  // namespace

SearchReport search_good_subsets(const CycleConfiguration& config, int size_min, int size_max,
                                 std::uint64_t seed, long long move_budget) {
    if (size_min < 1 || size_min > size_max ||
        static_cast<std::size_t>(size_max) > config.size())
        throw DataError("search size range invalid");
    SearchState st(config, size_min, size_max, seed, move_budget);
    if (config.size() <= 20)
        exhaustive_search(st);
    else
        heuristic_search(st, seed);
    for (SearchResult& r : st.report.results)
        if (!r.found)
            st.report.notes.push_back("size " + std::to_string(r.size) + ": none found");
    return st.report;
}

}  // namespace conifold
