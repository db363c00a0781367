// Exact integer linear algebra.
//
// Rank, determinant and pivot selection all run through one fraction-free
// Bareiss elimination with full pivoting. The pivot rule (smallest nonzero
// magnitude, lowest position on ties) keeps intermediate entries small on the
// sparse sign matrices this library mostly sees, and makes every routine
// deterministic: the same input always produces the same elimination, the
// same kernel basis, the same transforms.
//
// Kernel and Smith form use classic unimodular row/column reduction with
// gcd-style Euclidean descent. No floating point anywhere.

#include "conifold/zlinalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace conifold {

namespace {

Integer int_abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Fraction-free elimination. Returns the rank; optionally reports which
// original columns carried pivots and the determinant sign data.
struct BareissResult {
    int rank = 0;
    std::vector<std::size_t> pivot_cols;
    int sign = 1;
    Integer last_pivot = 1;
};

BareissResult bareiss(IntegerMatrix m) {
    BareissResult res;
    if (m.rows == 0 || m.cols == 0) return res;

    std::vector<std::size_t> colof(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) colof[j] = j;

    Integer prev = 1;
    const std::size_t steps = std::min(m.rows, m.cols);
    for (std::size_t t = 0; t < steps; ++t) {
        // full pivoting: smallest nonzero magnitude, lowest (row, col) on ties
        std::size_t pr = 0, pc = 0;
        bool found = false;
        Integer best = 0;
        for (std::size_t i = t; i < m.rows; ++i)
            for (std::size_t j = t; j < m.cols; ++j) {
                const Integer& x = m.at(i, j);
                if (x == 0) continue;
                Integer ax = int_abs(x);
                if (!found || ax < best) {
                    found = true;
                    best = ax;
                    pr = i;
                    pc = j;
                }
            }
        if (!found) break;

        if (pr != t) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(t, j), m.at(pr, j));
            res.sign = -res.sign;
        }
        if (pc != t) {
            for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, t), m.at(i, pc));
            std::swap(colof[t], colof[pc]);
            res.sign = -res.sign;
        }

        const Integer pivot = m.at(t, t);
        for (std::size_t i = t + 1; i < m.rows; ++i) {
            for (std::size_t j = t + 1; j < m.cols; ++j) {
                // exact by the Bareiss identity: prev divides the numerator
                m.at(i, j) = (pivot * m.at(i, j) - m.at(i, t) * m.at(t, j)) / prev;
            }
            m.at(i, t) = 0;
        }
        prev = pivot;
        res.last_pivot = pivot;
        res.pivot_cols.push_back(colof[t]);
        ++res.rank;
    }
    std::sort(res.pivot_cols.begin(), res.pivot_cols.end());
    return res;
}

// One Euclidean pass of unimodular row reduction on column c, rows [r0, ...):
// after it returns true, exactly one of those rows is nonzero at c and sits
// at r0 with a positive entry. Returns false if the column is already zero.
bool echelon_column(IntegerMatrix& b, std::size_t r0, std::size_t c) {
    while (true) {
        std::size_t best_row = b.rows;
        Integer best = 0;
        for (std::size_t i = r0; i < b.rows; ++i) {
            const Integer& x = b.at(i, c);
            if (x == 0) continue;
            Integer ax = int_abs(x);
            if (best_row == b.rows || ax < best) {
                best_row = i;
                best = ax;
            }
        }
        if (best_row == b.rows) return false;

        bool others = false;
        for (std::size_t i = r0; i < b.rows; ++i) {
            if (i == best_row || b.at(i, c) == 0) continue;
            Integer q = b.at(i, c) / b.at(best_row, c);
            for (std::size_t j = 0; j < b.cols; ++j) b.at(i, j) -= q * b.at(best_row, j);
            if (b.at(i, c) != 0) others = true;
        }
        if (others) continue;

        if (best_row != r0)
            for (std::size_t j = 0; j < b.cols; ++j) std::swap(b.at(r0, j), b.at(best_row, j));
        if (b.at(r0, c) < 0)
            for (std::size_t j = 0; j < b.cols; ++j) b.at(r0, j) = -b.at(r0, j);
        return true;
    }
}

// Hermite row reduction in place: pivots positive, entries above each pivot
// reduced into [0, pivot), rows ordered by pivot column.
void hermite_reduce(IntegerMatrix& k) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < k.cols && r < k.rows; ++c) {
        if (!echelon_column(k, r, c)) continue;
        for (std::size_t i = 0; i < r; ++i) {
            Integer q = k.at(i, c) / k.at(r, c);
            if (k.at(i, c) - q * k.at(r, c) < 0) q -= 1;  // floor division
            if (q == 0) continue;
            for (std::size_t j = 0; j < k.cols; ++j) k.at(i, j) -= q * k.at(r, j);
        }
        ++r;
    }
}

void add_row(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t j = 0; j < m.cols; ++j) m.at(dst, j) += factor * m.at(src, j);
}

void add_col(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& factor) {
    for (std::size_t i = 0; i < m.rows; ++i) m.at(i, dst) += factor * m.at(i, src);
}

void swap_rows(IntegerMatrix& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntegerMatrix& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

// Diagonalize d from position t on, mirroring row operations into u and
// column operations into v. Returns false when the remaining block is zero.
bool snf_step(IntegerMatrix& d, IntegerMatrix& u, IntegerMatrix& v, std::size_t t) {
    while (true) {
        std::size_t pr = 0, pc = 0;
        bool found = false;
        Integer best = 0;
        for (std::size_t i = t; i < d.rows; ++i)
            for (std::size_t j = t; j < d.cols; ++j) {
                const Integer& x = d.at(i, j);
                if (x == 0) continue;
                Integer ax = int_abs(x);
                if (!found || ax < best) {
                    found = true;
                    best = ax;
                    pr = i;
                    pc = j;
                }
            }
        if (!found) return false;

        swap_rows(d, t, pr);
        swap_rows(u, t, pr);
        swap_cols(d, t, pc);
        swap_cols(v, t, pc);

        bool clean = true;
        for (std::size_t i = t + 1; i < d.rows; ++i) {
            if (d.at(i, t) == 0) continue;
            Integer q = d.at(i, t) / d.at(t, t);
            add_row(d, i, t, -q);
            add_row(u, i, t, -q);
            if (d.at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < d.cols; ++j) {
            if (d.at(t, j) == 0) continue;
            Integer q = d.at(t, j) / d.at(t, t);
            add_col(d, j, t, -q);
            add_col(v, j, t, -q);
            if (d.at(t, j) != 0) clean = false;
        }
        if (clean) return true;
    }
}

}  // namespace

int rank_exact(const IntegerMatrix& m) { return bareiss(m).rank; }

std::vector<std::size_t> pivot_columns(const IntegerMatrix& m) {
    return bareiss(m).pivot_cols;
}

IntegerMatrix kernel_basis(const IntegerMatrix& m) {
    // Row-reduce [m | I] with unimodular operations; rows whose m-part dies
    // record, in the identity part, an integer relation among the rows of m.
    // Because the transformation is unimodular those relation rows are a basis
    // of the full (saturated) relation lattice.
    IntegerMatrix b(m.rows, m.cols + m.rows);
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) b.at(r, c) = m.at(r, c);
        b.at(r, m.cols + r) = 1;
    }

    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c)
        if (echelon_column(b, r, c)) ++r;

    IntegerMatrix k(m.rows - r, m.rows);
    for (std::size_t i = r; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.rows; ++j) k.at(i - r, j) = b.at(i, m.cols + j);

    hermite_reduce(k);
    for (std::size_t i = 0; i < k.rows; ++i) {
        std::vector<Integer> row = primitive_normalized(k.row(i));
        for (std::size_t j = 0; j < k.cols; ++j) k.at(i, j) = row[j];
    }
    return k;
}

std::vector<Integer> SmithDecomposition::diagonal() const {
    std::vector<Integer> out;
    const std::size_t n = std::min(d.rows, d.cols);
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(d.at(i, i));
    return out;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
    SmithDecomposition s;
    s.d = m;
    s.u = IntegerMatrix::identity(m.rows);
    s.v = IntegerMatrix::identity(m.cols);

    const std::size_t steps = std::min(m.rows, m.cols);
    for (std::size_t t = 0; t < steps; ++t)
        if (!snf_step(s.d, s.u, s.v, t)) break;

    // successive divisibility: fold offending entries together and re-reduce
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < steps; ++i) {
            const Integer a = s.d.at(i, i);
            const Integer b = s.d.at(i + 1, i + 1);
            if (a == 0 || b == 0 || b % a == 0) continue;
            add_row(s.d, i, i + 1, 1);
            add_row(s.u, i, i + 1, 1);
            for (std::size_t t = i; t < steps; ++t)
                if (!snf_step(s.d, s.u, s.v, t)) break;
            changed = true;
        }
    }

    for (std::size_t i = 0; i < steps; ++i) {
        if (s.d.at(i, i) < 0) {
            for (std::size_t j = 0; j < s.d.cols; ++j) s.d.at(i, j) = -s.d.at(i, j);
            for (std::size_t j = 0; j < s.u.cols; ++j) s.u.at(i, j) = -s.u.at(i, j);
        }
    }
    return s;
}

bool in_row_span(const IntegerMatrix& m, const std::vector<Integer>& v) {
    if (v.size() != m.cols) throw DataError("in_row_span: vector length mismatch");
    IntegerMatrix aug(m.rows + 1, m.cols);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    for (std::size_t c = 0; c < m.cols; ++c) aug.at(m.rows, c) = v[c];
    return rank_exact(aug) == rank_exact(m);
}

Integer determinant(const IntegerMatrix& m) {
    if (m.rows != m.cols) throw DataError("determinant: matrix not square");
    if (m.rows == 0) return 1;
    BareissResult res = bareiss(m);
    if (res.rank < static_cast<int>(m.rows)) return 0;
    return res.sign > 0 ? res.last_pivot : Integer(-res.last_pivot);
}

std::vector<Integer> primitive_normalized(std::vector<Integer> v) {
    Integer g = 0;
    for (const Integer& x : v) g = int_gcd(g, x);
    if (g == 0) return v;
    int lead = 0;
    for (const Integer& x : v) {
        if (x != 0) {
            lead = x < 0 ? -1 : 1;
            break;
        }
    }
    if (lead < 0) g = -g;
    for (Integer& x : v) x /= g;
    return v;
}

}  // namespace conifold
