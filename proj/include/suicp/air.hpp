#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "suicp/linalg.hpp"

namespace suicp {

/// Euclidean-style remainder chain that describes the block structure of an
/// adjacent-independent-row matrix. For an m x n matrix:
///
///   remainders[0] = n, remainders[1] = m - n, and each further entry is the
///   remainder of dividing the previous two; quotients[i] is the quotient of
///   the i-th division. The chain stops before the terminating zero remainder
///   (except in the degenerate m == n case, where remainders = {n, 0}).
struct RemainderChain {
    std::vector<std::uint32_t> remainders;
    std::vector<std::uint32_t> quotients;
};

inline RemainderChain remainder_chain(std::size_t rows, std::size_t cols) {
    if (cols == 0 || cols > rows) {
        throw std::invalid_argument("remainder_chain: need 1 <= cols <= rows");
    }
    RemainderChain chain;
    std::uint32_t a = static_cast<std::uint32_t>(cols);
    std::uint32_t b = static_cast<std::uint32_t>(rows - cols);
    chain.remainders = {a, b};
    while (b != 0) {
        chain.quotients.push_back(a / b);
        const std::uint32_t r = a % b;
        if (r == 0) break;
        chain.remainders.push_back(r);
        a = b;
        b = r;
    }
    return chain;
}

/// Constructs the m x n adjacent-independent-row (AIR) matrix: a 0/1 matrix
/// in which any n cyclically adjacent rows are linearly independent over
/// every field. Built by alternately tiling stacked identity blocks row-wise
/// and their transposes column-wise over a shrinking unfilled sub-rectangle.
inline FieldMatrix air_matrix(std::size_t rows, std::size_t cols,
                              PrimeField field = PrimeField(2)) {
    if (cols == 0 || cols > rows) {
        throw std::invalid_argument("air_matrix: need 1 <= cols <= rows");
    }
    FieldMatrix mat(rows, cols, field);
    std::size_t row0 = 0, col0 = 0;
    std::size_t m = rows, n = cols;
    for (;;) {
        // Fill the first floor(m/n)*n rows of the unfilled part with
        // stacked n x n identities.
        const std::size_t q = m / n;
        const std::size_t r = m % n;
        for (std::size_t t = 0; t < q * n; ++t) {
            mat.set_raw(row0 + t, col0 + t % n, 1);
        }
        row0 += q * n;
        if (r == 0) break;
        m = r;
        // Fill the first floor(n/r)*r columns of what remains with the
        // transposed identity stack (r rows tall).
        const std::size_t q2 = n / r;
        const std::size_t r2 = n % r;
        for (std::size_t j = 0; j < q2 * r; ++j) {
            mat.set_raw(row0 + j % r, col0 + j, 1);
        }
        col0 += q2 * r;
        if (r2 == 0) break;
        n = r2;
    }
    return mat;
}

/// True iff every cyclic window of `m.cols()` adjacent rows of `m` is
/// linearly independent over each of the given fields.
inline bool all_windows_independent(const FieldMatrix& m, std::span<const PrimeField> fields) {
    for (const PrimeField& f : fields) {
        const FieldMatrix view = (f == m.field()) ? m : m.reinterpret(f);
        for (std::size_t start = 0; start < view.rows(); ++start) {
            if (!cyclic_window_independent(view, start, view.cols())) return false;
        }
    }
    return true;
}

inline bool all_windows_independent(const FieldMatrix& m,
                                    std::initializer_list<PrimeField> fields) {
    return all_windows_independent(m, std::span<const PrimeField>(fields.begin(), fields.size()));
}

/// Builds the (rows, cols) AIR matrix and checks the adjacent-independence
/// property over every listed field.
inline bool verify_air(std::size_t rows, std::size_t cols, std::span<const PrimeField> fields) {
    return all_windows_independent(air_matrix(rows, cols), fields);
}

inline bool verify_air(std::size_t rows, std::size_t cols,
                       std::initializer_list<PrimeField> fields) {
    return verify_air(rows, cols, std::span<const PrimeField>(fields.begin(), fields.size()));
}

}  // namespace suicp
