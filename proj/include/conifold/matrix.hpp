#pragma once

#include "conifold/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace conifold {

// Dense row-major matrix of arbitrary-precision integers.
struct IntegerMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Integer> a;

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long long>> m) {
        rows = m.size();
        cols = rows ? m.begin()->size() : 0;
        a.reserve(rows * cols);
        for (const auto& row : m) {
            if (row.size() != cols) throw DataError("ragged matrix initializer");
            for (long long x : row) a.emplace_back(x);
        }
    }

    Integer& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Integer& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static IntegerMatrix identity(std::size_t n) {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::vector<Integer> row(std::size_t r) const {
        return std::vector<Integer>(a.begin() + static_cast<std::ptrdiff_t>(r * cols),
                                    a.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols));
    }

    IntegerMatrix transposed() const {
        IntegerMatrix t(cols, rows);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    bool operator==(const IntegerMatrix& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

inline IntegerMatrix matmul(const IntegerMatrix& x, const IntegerMatrix& y) {
    if (x.cols != y.rows) throw DataError("matmul: shape mismatch");
    IntegerMatrix z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Integer& f = x.at(i, k);
            if (f == 0) continue;
            for (std::size_t j = 0; j < y.cols; ++j) z.at(i, j) += f * y.at(k, j);
        }
    return z;
}

// Submatrix of the given rows (in the given order), all columns.
inline IntegerMatrix take_rows(const IntegerMatrix& m, const std::vector<int>& rows) {
    IntegerMatrix out(rows.size(), m.cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < m.cols; ++c)
            out.at(i, c) = m.at(static_cast<std::size_t>(rows[i]), c);
    return out;
}

inline IntegerMatrix take_cols(const IntegerMatrix& m, const std::vector<std::size_t>& cols) {
    IntegerMatrix out(m.rows, cols.size());
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) out.at(r, j) = m.at(r, cols[j]);
    return out;
}

}  // namespace conifold
