#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "suicp/fields.hpp"

namespace suicp {

/// Dense matrix over a prime field, stored row-major as reduced residues.
class FieldMatrix {
public:
    FieldMatrix(std::size_t rows, std::size_t cols, PrimeField field)
        : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

    static FieldMatrix identity(std::size_t n, PrimeField field) {
        FieldMatrix m(n, n, field);
        for (std::size_t i = 0; i < n; ++i) m.set_raw(i, i, 1);
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }

    [[nodiscard]] std::uint32_t raw(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    void set_raw(std::size_t r, std::size_t c, std::uint32_t v) {
        if (v >= field_.modulus()) {
            throw std::invalid_argument("entry " + std::to_string(v) +
                                        " out of range for " + field_.name());
        }
        data_[r * cols_ + c] = v;
    }

    [[nodiscard]] FieldElement at(std::size_t r, std::size_t c) const {
        return FieldElement(raw(r, c), field_);
    }

    void set(std::size_t r, std::size_t c, const FieldElement& e) {
        if (e.field() != field_) {
            throw std::invalid_argument("field mismatch: " + field_.name() + " vs " +
                                        e.field().name());
        }
        data_[r * cols_ + c] = e.value();
    }

    [[nodiscard]] const std::uint32_t* row_data(std::size_t r) const {
        return data_.data() + r * cols_;
    }

    /// Same 0/1 (or more generally in-range) entries viewed over another field.
    [[nodiscard]] FieldMatrix reinterpret(PrimeField other) const {
        FieldMatrix m(rows_, cols_, other);
        for (std::size_t i = 0; i < data_.size(); ++i) {
            if (data_[i] >= other.modulus()) {
                throw std::invalid_argument("entry " + std::to_string(data_[i]) +
                                            " out of range for " + other.name());
            }
            m.data_[i] = data_[i];
        }
        return m;
    }

    bool operator==(const FieldMatrix&) const = default;

private:
    friend struct detail_matrix_access;

    std::size_t rows_;
    std::size_t cols_;
    PrimeField field_;
    std::vector<std::uint32_t> data_;
};

struct detail_matrix_access {
    static std::vector<std::uint32_t>& data(FieldMatrix& m) { return m.data_; }
    static const std::vector<std::uint32_t>& data(const FieldMatrix& m) { return m.data_; }
};

namespace detail {

// Row-reduction kernels. The modulus is a template parameter for the common
// small primes so the compiler can strength-reduce the % operations; anything
// else falls back to the runtime-modulus version.
template <typename Mod>
std::size_t eliminate(std::uint32_t* a, std::size_t nrows, std::size_t ncols,
                      std::size_t pivot_col_limit, bool full_reduce,
                      std::vector<std::size_t>* pivot_cols, Mod mod) {
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < pivot_col_limit && pr < nrows; ++pc) {
        std::size_t sel = pr;
        while (sel < nrows && a[sel * ncols + pc] == 0) ++sel;
        if (sel == nrows) continue;
        if (sel != pr) {
            for (std::size_t j = 0; j < ncols; ++j) {
                std::swap(a[sel * ncols + j], a[pr * ncols + j]);
            }
        }
        std::uint32_t* piv = a + pr * ncols;
        const std::uint32_t pinv = mod.inv(piv[pc]);
        if (pinv != 1) {
            for (std::size_t j = pc; j < ncols; ++j) piv[j] = mod.mul(piv[j], pinv);
        }
        const std::size_t first = full_reduce ? 0 : pr + 1;
        for (std::size_t r = first; r < nrows; ++r) {
            if (r == pr) continue;
            std::uint32_t* row = a + r * ncols;
            const std::uint32_t f = row[pc];
            if (f == 0) continue;
            const std::uint32_t nf = mod.neg(f);
            for (std::size_t j = pc; j < ncols; ++j) {
                row[j] = mod.add_mul(row[j], nf, piv[j]);
            }
        }
        if (pivot_cols) pivot_cols->push_back(pc);
        ++pr;
    }
    return pr;
}

template <std::uint32_t Q>
struct CtMod {
    static std::uint32_t inv(std::uint32_t a) { return PrimeField(Q).inv(a); }
    static std::uint32_t mul(std::uint32_t a, std::uint32_t b) noexcept {
        return static_cast<std::uint32_t>(std::uint64_t(a) * b % Q);
    }
    static std::uint32_t neg(std::uint32_t a) noexcept { return a == 0 ? 0 : Q - a; }
    static std::uint32_t add_mul(std::uint32_t a, std::uint32_t f, std::uint32_t b) noexcept {
        return static_cast<std::uint32_t>((a + std::uint64_t(f) * b) % Q);
    }
};

struct RtMod {
    std::uint32_t q;
    std::uint32_t inv(std::uint32_t a) const { return PrimeField(q).inv(a); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(std::uint64_t(a) * b % q);
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : q - a; }
    std::uint32_t add_mul(std::uint32_t a, std::uint32_t f, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>((a + std::uint64_t(f) * b) % q);
    }
};

inline std::size_t eliminate_dispatch(std::uint32_t q, std::uint32_t* a, std::size_t nrows,
                                      std::size_t ncols, std::size_t pivot_col_limit,
                                      bool full_reduce, std::vector<std::size_t>* pivot_cols) {
    switch (q) {
        case 2:
            return eliminate(a, nrows, ncols, pivot_col_limit, full_reduce, pivot_cols, CtMod<2>{});
        case 3:
            return eliminate(a, nrows, ncols, pivot_col_limit, full_reduce, pivot_cols, CtMod<3>{});
        case 5:
            return eliminate(a, nrows, ncols, pivot_col_limit, full_reduce, pivot_cols, CtMod<5>{});
        case 7:
            return eliminate(a, nrows, ncols, pivot_col_limit, full_reduce, pivot_cols, CtMod<7>{});
        default:
            return eliminate(a, nrows, ncols, pivot_col_limit, full_reduce, pivot_cols, RtMod{q});
    }
}

}  // namespace detail

/// Rank over the matrix's field, by Gaussian elimination.
inline std::size_t rank(const FieldMatrix& m) {
    std::vector<std::uint32_t> work = detail_matrix_access::data(m);
    return detail::eliminate_dispatch(m.field().modulus(), work.data(), m.rows(), m.cols(),
                                      m.cols(), false, nullptr);
}

struct RowEchelon {
    FieldMatrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank;
};

/// Reduced row echelon form with deterministic column-order pivoting
/// (first nonzero row in each column). Pivoting stops after
/// `pivot_col_limit` columns; trailing columns are reduced but never pivoted
/// on, which is how augmented systems are handled.
inline RowEchelon reduced_row_echelon(FieldMatrix m, std::size_t pivot_col_limit) {
    RowEchelon out{std::move(m), {}, 0};
    auto& data = detail_matrix_access::data(out.reduced);
    out.rank = detail::eliminate_dispatch(out.reduced.field().modulus(), data.data(),
                                          out.reduced.rows(), out.reduced.cols(),
                                          pivot_col_limit, true, &out.pivot_cols);
    return out;
}

inline RowEchelon reduced_row_echelon(FieldMatrix m) {
    const std::size_t limit = m.cols();
    return reduced_row_echelon(std::move(m), limit);
}

/// Solves A·x = b. Returns the solution with all free variables set to zero,
/// or nullopt when the system is inconsistent.
inline std::optional<std::vector<FieldElement>> solve(const FieldMatrix& a,
                                                      const std::vector<FieldElement>& b) {
    if (b.size() != a.rows()) {
        throw std::invalid_argument("solve: rhs length " + std::to_string(b.size()) +
                                    " does not match " + std::to_string(a.rows()) + " rows");
    }
    const PrimeField field = a.field();
    FieldMatrix aug(a.rows(), a.cols() + 1, field);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.set_raw(r, c, a.raw(r, c));
        aug.set(r, a.cols(), b[r]);
    }
    RowEchelon re = reduced_row_echelon(std::move(aug), a.cols());
    for (std::size_t r = re.rank; r < a.rows(); ++r) {
        if (re.reduced.raw(r, a.cols()) != 0) return std::nullopt;
    }
    std::vector<FieldElement> x(a.cols(), field.zero());
    for (std::size_t p = 0; p < re.pivot_cols.size(); ++p) {
        x[re.pivot_cols[p]] = re.reduced.at(p, a.cols());
    }
    return x;
}

/// True iff the `width` cyclically adjacent rows starting at `start`
/// (indices mod m.rows()) are linearly independent.
inline bool cyclic_window_independent(const FieldMatrix& m, std::size_t start,
                                      std::size_t width) {
    if (width > m.rows()) {
        throw std::invalid_argument("window width exceeds row count");
    }
    if (width == 0) return true;
    if (width > m.cols()) return false;
    std::vector<std::uint32_t> window(width * m.cols());
    for (std::size_t t = 0; t < width; ++t) {
        const std::size_t r = (start + t) % m.rows();
        const std::uint32_t* src = m.row_data(r);
        std::copy(src, src + m.cols(), window.begin() + t * m.cols());
    }
    return detail::eliminate_dispatch(m.field().modulus(), window.data(), width, m.cols(),
                                      m.cols(), false, nullptr) == width;
}

namespace detail {

// Dot product of reduced residues. With q below 2^16 every product fits a
// 64-bit accumulator for any row count that fits in memory, so the modular
// reduction happens once at the end.
inline std::uint32_t dot(const PrimeField& field, std::size_t n, auto&& av, auto&& bv) {
    if (field.modulus() < (1u << 16)) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < n; ++i) acc += std::uint64_t(av(i)) * bv(i);
        return field.reduce(acc);
    }
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s = field.add(s, field.mul(av(i), bv(i)));
    return s;
}

}  // namespace detail

/// Row vector times matrix; the workhorse of encoding-matrix multiplication.
inline std::vector<FieldElement> vec_times_matrix(const std::vector<FieldElement>& v,
                                                  const FieldMatrix& m) {
    if (v.size() != m.rows()) {
        throw std::invalid_argument("vec_times_matrix: length " + std::to_string(v.size()) +
                                    " does not match " + std::to_string(m.rows()) + " rows");
    }
    const PrimeField field = m.field();
    std::vector<FieldElement> out;
    out.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        out.emplace_back(detail::dot(
                             field, m.rows(), [&](std::size_t r) { return v[r].value(); },
                             [&](std::size_t r) { return m.raw(r, c); }),
                         field);
    }
    return out;
}

inline std::vector<FieldElement> matrix_times_vec(const FieldMatrix& m,
                                                  const std::vector<FieldElement>& v) {
    if (v.size() != m.cols()) {
        throw std::invalid_argument("matrix_times_vec: length " + std::to_string(v.size()) +
                                    " does not match " + std::to_string(m.cols()) + " cols");
    }
    const PrimeField field = m.field();
    std::vector<FieldElement> out;
    out.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const std::uint32_t* row = m.row_data(r);
        out.emplace_back(detail::dot(
                             field, m.cols(), [&](std::size_t c) { return row[c]; },
                             [&](std::size_t c) { return v[c].value(); }),
                         field);
    }
    return out;
}

/// Shared text format: one row per line, base-10 entries, single spaces.
inline std::string to_text(const FieldMatrix& m) {
    std::ostringstream os;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ' ';
            os << m.raw(r, c);
        }
        os << '\n';
    }
    return os.str();
}

inline FieldMatrix matrix_from_text(const std::string& text, PrimeField field) {
    std::vector<std::vector<std::uint32_t>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<std::uint32_t> row;
        std::uint64_t v;
        while (ls >> v) {
            if (v >= field.modulus()) {
                throw std::invalid_argument("matrix entry " + std::to_string(v) +
                                            " out of range for " + field.name());
            }
            row.push_back(static_cast<std::uint32_t>(v));
        }
        if (!ls.eof()) throw std::invalid_argument("malformed matrix row: " + line);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty matrix text");
    const std::size_t cols = rows.front().size();
    for (const auto& row : rows) {
        if (row.size() != cols) throw std::invalid_argument("ragged matrix text");
    }
    FieldMatrix m(rows.size(), cols, field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.set_raw(r, c, rows[r][c]);
    }
    return m;
}

}  // namespace suicp
