#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "suicp/air.hpp"
#include "suicp/linalg.hpp"
#include "suicp/problem.hpp"

namespace suicp {

/// The K message vectors of an instance, each `dimension` symbols long.
/// Storage is row-major: symbol (k, c) is component c of message k,
/// with components numbered 0 .. dimension-1.
class MessageBlock {
public:
    MessageBlock(ProblemParams params, PrimeField field)
        : params_(params),
          derived_(derive(params)),
          field_(field),
          data_(std::size_t(params.message_count()) * derived_.dimension, 0) {}

    MessageBlock(ProblemParams params, PrimeField field, std::vector<std::uint32_t> symbols)
        : MessageBlock(params, field) {
        if (symbols.size() != data_.size()) {
            throw std::invalid_argument("message grid needs " + std::to_string(data_.size()) +
                                        " symbols, got " + std::to_string(symbols.size()));
        }
        for (std::uint32_t v : symbols) {
            if (v >= field_.modulus()) {
                throw std::invalid_argument("message symbol " + std::to_string(v) +
                                            " out of range for " + field_.name());
            }
        }
        data_ = std::move(symbols);
    }

    [[nodiscard]] const ProblemParams& params() const noexcept { return params_; }
    [[nodiscard]] const DerivedParams& derived() const noexcept { return derived_; }
    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
    [[nodiscard]] std::uint32_t dimension() const noexcept { return derived_.dimension; }

    [[nodiscard]] std::uint32_t raw(std::size_t message, std::size_t component) const {
        return data_[message * derived_.dimension + component];
    }

    void set_raw(std::size_t message, std::size_t component, std::uint32_t v) {
        if (v >= field_.modulus()) {
            throw std::invalid_argument("message symbol out of range for " + field_.name());
        }
        data_[message * derived_.dimension + component] = v;
    }

    [[nodiscard]] FieldElement symbol(std::size_t message, std::size_t component) const {
        return FieldElement(raw(message, component), field_);
    }

    [[nodiscard]] std::vector<FieldElement> message(std::size_t k) const {
        std::vector<FieldElement> out;
        out.reserve(derived_.dimension);
        for (std::size_t c = 0; c < derived_.dimension; ++c) out.push_back(symbol(k, c));
        return out;
    }

    /// Flattened row vector (x_0, x_1, ...) with each message's components in
    /// order; the layout the encoding matrix multiplies.
    [[nodiscard]] std::vector<FieldElement> flattened() const {
        std::vector<FieldElement> out;
        out.reserve(data_.size());
        for (std::uint32_t v : data_) out.emplace_back(v, field_);
        return out;
    }

    bool operator==(const MessageBlock&) const = default;

private:
    ProblemParams params_;
    DerivedParams derived_;
    PrimeField field_;
    std::vector<std::uint32_t> data_;
};

/// Extended symbols of a message block:
///   groups(s, c)  sum of component c over the `group` messages of block s
///   reduced[s]    the block-diagonal combination fed to the reduced
///                 one-sided problem: sum over c of groups(s - c, c)
struct ExtendedSymbols {
    FieldMatrix groups;
    std::vector<FieldElement> reduced;
};

/// A fully constructed code: the AIR matrix of the reduced problem plus the
/// expanded per-symbol encoding matrix (each AIR row L_t serves every message
/// component that the reduction maps onto block t).
class CodeSpec {
public:
    CodeSpec(ProblemParams params, PrimeField field)
        : CodeSpec(params, field,
                   air_matrix(derive(params).blocks, derive(params).length, field),
                   build_encoding(params, field), true) {}

    /// Reassembles a spec from serialized parts, validating that the matrices
    /// are exactly what the construction produces.
    static CodeSpec from_parts(ProblemParams params, PrimeField field, FieldMatrix air,
                               FieldMatrix encoding) {
        const DerivedParams d = derive(params);
        if (air.rows() != d.blocks || air.cols() != d.length) {
            throw std::invalid_argument("air matrix has wrong shape");
        }
        if (air.field() != field || encoding.field() != field) {
            throw std::invalid_argument("matrix field does not match code field");
        }
        if (encoding.rows() != std::size_t(params.message_count()) * d.dimension ||
            encoding.cols() != d.length) {
            throw std::invalid_argument("encoding matrix has wrong shape");
        }
        if (air != air_matrix(d.blocks, d.length, field)) {
            throw std::invalid_argument("air matrix is not the canonical construction");
        }
        if (encoding != build_encoding(params, field)) {
            throw std::invalid_argument("encoding matrix does not match the construction");
        }
        return CodeSpec(params, field, std::move(air), std::move(encoding), false);
    }

    [[nodiscard]] const ProblemParams& params() const noexcept { return params_; }
    [[nodiscard]] const DerivedParams& derived() const noexcept { return derived_; }
    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
    [[nodiscard]] const FieldMatrix& air() const noexcept { return air_; }
    [[nodiscard]] const FieldMatrix& encoding() const noexcept { return encoding_; }

    [[nodiscard]] std::uint32_t length() const noexcept { return derived_.length; }
    [[nodiscard]] std::uint32_t dimension() const noexcept { return derived_.dimension; }
    [[nodiscard]] std::uint32_t blocks() const noexcept { return derived_.blocks; }
    [[nodiscard]] std::uint32_t group() const noexcept { return derived_.group; }

    /// Nonzero entries of AIR row r as (column, value) pairs.
    [[nodiscard]] const std::vector<std::pair<std::uint32_t, std::uint32_t>>& air_row_support(
        std::size_t r) const {
        return row_support_[r];
    }

    /// AIR row feeding component c of message m: row (floor(m/group) + c) of
    /// the reduced problem, cyclically.
    [[nodiscard]] std::size_t carrier_row(std::size_t message, std::size_t component) const {
        return (message / derived_.group + component) % derived_.blocks;
    }

    bool operator==(const CodeSpec& other) const {
        return params_ == other.params_ && field_ == other.field_ && air_ == other.air_ &&
               encoding_ == other.encoding_;
    }

private:
    CodeSpec(ProblemParams params, PrimeField field, FieldMatrix air, FieldMatrix encoding,
             bool verify)
        : params_(params),
          derived_(derive(params)),
          field_(field),
          air_(std::move(air)),
          encoding_(std::move(encoding)) {
        if (verify) {
            const PrimeField fields[] = {field_};
            if (!all_windows_independent(air_, std::span<const PrimeField>(fields, 1))) {
                throw std::logic_error("adjacent-independence violated for " +
                                       std::to_string(air_.rows()) + "x" +
                                       std::to_string(air_.cols()) + " matrix over " +
                                       field_.name());
            }
        }
        row_support_.resize(air_.rows());
        for (std::size_t r = 0; r < air_.rows(); ++r) {
            for (std::size_t c = 0; c < air_.cols(); ++c) {
                if (air_.raw(r, c) != 0) {
                    row_support_[r].emplace_back(static_cast<std::uint32_t>(c), air_.raw(r, c));
                }
            }
        }
    }

    static FieldMatrix build_encoding(const ProblemParams& params, const PrimeField& field) {
        const DerivedParams d = derive(params);
        const FieldMatrix air = air_matrix(d.blocks, d.length, field);
        FieldMatrix enc(std::size_t(params.message_count()) * d.dimension, d.length, field);
        for (std::size_t m = 0; m < params.message_count(); ++m) {
            for (std::size_t c = 0; c < d.dimension; ++c) {
                const std::size_t src = (m / d.group + c) % d.blocks;
                for (std::size_t j = 0; j < d.length; ++j) {
                    enc.set_raw(m * d.dimension + c, j, air.raw(src, j));
                }
            }
        }
        return enc;
    }

    ProblemParams params_;
    DerivedParams derived_;
    PrimeField field_;
    FieldMatrix air_;
    FieldMatrix encoding_;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> row_support_;
};

inline CodeSpec build_code(const ProblemParams& params, const PrimeField& field) {
    return CodeSpec(params, field);
}

inline void check_block_matches(const MessageBlock& messages, const CodeSpec& spec) {
    if (messages.params() != spec.params() || messages.field() != spec.field()) {
        throw std::invalid_argument("message block does not match code parameters");
    }
}

inline ExtendedSymbols extended(const MessageBlock& messages) {
    const DerivedParams& d = messages.derived();
    const PrimeField& field = messages.field();
    FieldMatrix groups(d.blocks, d.dimension, field);
    for (std::size_t s = 0; s < d.blocks; ++s) {
        for (std::size_t c = 0; c < d.dimension; ++c) {
            std::uint32_t acc = 0;
            for (std::size_t j = 0; j < d.group; ++j) {
                acc = field.add(acc, messages.raw(s * d.group + j, c));
            }
            groups.set_raw(s, c, acc);
        }
    }
    std::vector<FieldElement> reduced;
    reduced.reserve(d.blocks);
    for (std::size_t s = 0; s < d.blocks; ++s) {
        std::uint32_t acc = 0;
        for (std::size_t c = 0; c < d.dimension; ++c) {
            acc = field.add(acc, groups.raw((s + d.blocks - c) % d.blocks, c));
        }
        reduced.emplace_back(acc, field);
    }
    return ExtendedSymbols{std::move(groups), std::move(reduced)};
}

/// Encodes via the reduced symbols: c_j = sum over blocks s of reduced[s] *
/// air(s, j).
inline std::vector<FieldElement> encode(const MessageBlock& messages, const CodeSpec& spec) {
    check_block_matches(messages, spec);
    const PrimeField& field = spec.field();
    const ExtendedSymbols ext = extended(messages);
    std::vector<std::uint32_t> acc(spec.length(), 0);
    for (std::size_t s = 0; s < spec.blocks(); ++s) {
        const std::uint32_t ys = ext.reduced[s].value();
        if (ys == 0) continue;
        for (const auto& [col, val] : spec.air_row_support(s)) {
            acc[col] = field.add(acc[col], field.mul(ys, val));
        }
    }
    std::vector<FieldElement> out;
    out.reserve(acc.size());
    for (std::uint32_t v : acc) out.emplace_back(v, field);
    return out;
}

/// Encodes by multiplying the flattened message row vector with the full
/// encoding matrix. Mathematically identical to encode(); kept as a separate
/// dense route so tests can compare the two.
inline std::vector<FieldElement> encode_with_matrix(const MessageBlock& messages,
                                                    const CodeSpec& spec) {
    check_block_matches(messages, spec);
    return vec_times_matrix(messages.flattened(), spec.encoding());
}

/// Per-block decoding recipe: weights give the broadcast-symbol combination
/// whose value equals reduced[s] plus the listed window terms,
///   sum_j weights[j] * c_j = y_s + sum_t coeffs[t] * y_{s + offsets[t]}
/// with 1 <= offsets[0] < ... <= window.
struct PlanEntry {
    std::vector<std::uint32_t> weights;
    std::vector<std::uint32_t> offsets;
    std::vector<std::uint32_t> coeffs;

    bool operator==(const PlanEntry&) const = default;

    [[nodiscard]] std::vector<std::uint32_t> tau() const {
        std::vector<std::uint32_t> t;
        for (std::uint32_t j = 0; j < weights.size(); ++j) {
            if (weights[j] != 0) t.push_back(j);
        }
        return t;
    }
};

class DecodingPlan {
public:
    explicit DecodingPlan(std::vector<PlanEntry> entries) : entries_(std::move(entries)) {}

    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] const PlanEntry& entry(std::size_t s) const { return entries_.at(s); }
    [[nodiscard]] const std::vector<PlanEntry>& entries() const noexcept { return entries_; }

    bool operator==(const DecodingPlan&) const = default;

private:
    std::vector<PlanEntry> entries_;
};

/// For each block s, solves for the broadcast combination supported (as a
/// combination of reduced symbols) on the cyclic window {s, ..., s+window}
/// with coefficient one at s. The system is square with the out-of-window
/// rows of the AIR matrix as constraints; by adjacent independence it is
/// nonsingular, so each plan is unique.
inline DecodingPlan decoding_plan(const CodeSpec& spec) {
    const PrimeField& field = spec.field();
    const std::size_t blocks = spec.blocks();
    const std::size_t window = spec.derived().window;
    const std::size_t n = spec.length();
    std::vector<PlanEntry> entries;
    entries.reserve(blocks);
    for (std::size_t s = 0; s < blocks; ++s) {
        FieldMatrix sys(n, n, field);
        std::vector<FieldElement> rhs(n, field.zero());
        // Rows s+window+1 .. s+blocks-1 (cyclic) pinned to zero, then the
        // unit constraint at s; together these are `n` cyclically adjacent
        // AIR rows.
        for (std::size_t t = 0; t + 1 < n; ++t) {
            const std::size_t r = (s + window + 1 + t) % blocks;
            for (std::size_t j = 0; j < n; ++j) sys.set_raw(t, j, spec.air().raw(r, j));
        }
        for (std::size_t j = 0; j < n; ++j) sys.set_raw(n - 1, j, spec.air().raw(s, j));
        rhs[n - 1] = field.one();

        auto w = solve(sys, rhs);
        if (!w) {
            throw std::logic_error("decoding plan solve failed at block " + std::to_string(s) +
                                   ": adjacent-independence violated");
        }
        PlanEntry entry;
        entry.weights.reserve(n);
        for (const FieldElement& e : *w) entry.weights.push_back(e.value());

        // Map the combination back to reduced-symbol coefficients and record
        // the window terms in offset order.
        std::vector<std::uint32_t> coeff_of(blocks, 0);
        for (std::size_t t = 0; t < blocks; ++t) {
            std::uint32_t g = 0;
            for (const auto& [col, val] : spec.air_row_support(t)) {
                g = field.add(g, field.mul(val, entry.weights[col]));
            }
            coeff_of[t] = g;
        }
        if (coeff_of[s] != 1) {
            throw std::logic_error("plan for block " + std::to_string(s) +
                                   " lost its unit coefficient");
        }
        for (std::size_t offset = 1; offset < blocks; ++offset) {
            const std::uint32_t g = coeff_of[(s + offset) % blocks];
            if (g == 0) continue;
            if (offset > window) {
                throw std::logic_error("plan for block " + std::to_string(s) +
                                       " leaks outside its window");
            }
            entry.offsets.push_back(static_cast<std::uint32_t>(offset));
            entry.coeffs.push_back(g);
        }
        entries.push_back(std::move(entry));
    }
    return DecodingPlan(std::move(entries));
}

/// Side-information values: message index -> all components of that message.
using SideInformation = std::map<std::size_t, std::vector<FieldElement>>;

namespace detail {

inline void check_side_information(const ProblemParams& params, const PrimeField& field,
                                   std::uint32_t dimension, std::size_t receiver,
                                   const SideInformation& known) {
    const std::vector<std::size_t> wanted = side_info(params, receiver);
    for (std::size_t m : wanted) {
        const auto it = known.find(m);
        if (it == known.end()) {
            throw std::invalid_argument("missing side-information message x_" +
                                        std::to_string(m) + " for receiver " +
                                        std::to_string(receiver));
        }
        if (it->second.size() != dimension) {
            throw std::invalid_argument("side-information message x_" + std::to_string(m) +
                                        " needs " + std::to_string(dimension) + " components");
        }
        for (const FieldElement& e : it->second) {
            if (e.field() != field) {
                throw std::invalid_argument("side-information symbol of x_" + std::to_string(m) +
                                            " is not in " + field.name());
            }
        }
    }
    if (known.size() != wanted.size()) {
        throw std::invalid_argument("side information must cover exactly the receiver's set (" +
                                    std::to_string(wanted.size()) + " messages, got " +
                                    std::to_string(known.size()) + ")");
    }
}

inline void check_codeword(const CodeSpec& spec, const std::vector<FieldElement>& codeword,
                           std::size_t expected) {
    if (codeword.size() != expected) {
        throw std::invalid_argument("codeword length " + std::to_string(codeword.size()) +
                                    ", expected " + std::to_string(expected));
    }
    for (const FieldElement& e : codeword) {
        if (e.field() != spec.field()) {
            throw std::invalid_argument("codeword symbol not in " + spec.field().name());
        }
    }
}

}  // namespace detail

/// Successive interference cancellation receiver. Components are recovered
/// highest-index first: component c comes out of the plan sum at block
/// floor(k/group) + c, after subtracting side-information terms and the
/// interference of components already decoded in earlier steps.
inline std::vector<FieldElement> receiver_decode(std::size_t receiver,
                                                 const std::vector<FieldElement>& codeword,
                                                 const SideInformation& known,
                                                 const CodeSpec& spec,
                                                 const DecodingPlan& plan) {
    const ProblemParams& params = spec.params();
    if (receiver >= params.message_count()) {
        throw std::invalid_argument("receiver index out of range");
    }
    detail::check_codeword(spec, codeword, spec.length());
    detail::check_side_information(params, spec.field(), spec.dimension(), receiver, known);
    if (plan.size() != spec.blocks()) {
        throw std::invalid_argument("plan does not match code");
    }

    const PrimeField& field = spec.field();
    const DerivedParams& d = spec.derived();
    const std::size_t home = receiver / d.group;

    std::vector<std::uint32_t> decoded(d.dimension, 0);
    for (std::size_t step = 0; step < d.dimension; ++step) {
        const std::size_t target = d.dimension - 1 - step;
        const std::size_t sum_block = (home + target) % d.blocks;
        const PlanEntry& entry = plan.entry(sum_block);

        std::uint32_t value = 0;
        for (std::size_t j = 0; j < codeword.size(); ++j) {
            value = field.add(value, field.mul(entry.weights[j], codeword[j].value()));
        }

        // Walk the reduced symbols the sum touches and cancel everything that
        // is not the target: side-information terms directly, own-message
        // terms from the components already decoded.
        bool hit = false;
        auto cancel_term = [&](std::size_t block, std::uint32_t coeff) {
            for (std::size_t c = 0; c < d.dimension; ++c) {
                const std::size_t grp = (block + d.blocks - c) % d.blocks;
                for (std::size_t j = 0; j < d.group; ++j) {
                    const std::size_t m = grp * d.group + j;
                    if (m == receiver) {
                        if (c == target) {
                            if (coeff != 1) {
                                throw std::logic_error("target symbol with non-unit coefficient");
                            }
                            hit = true;
                        } else if (c > target) {
                            value = field.sub(value, field.mul(coeff, decoded[c]));
                        } else {
                            throw std::logic_error(
                                "interference from undecoded component of receiver " +
                                std::to_string(receiver));
                        }
                    } else {
                        const auto it = known.find(m);
                        if (it == known.end()) {
                            throw std::logic_error("plan sum reaches message x_" +
                                                   std::to_string(m) +
                                                   " outside receiver side information");
                        }
                        value = field.sub(value, field.mul(coeff, it->second[c].value()));
                    }
                }
            }
        };
        cancel_term(sum_block, 1);
        for (std::size_t t = 0; t < entry.offsets.size(); ++t) {
            cancel_term((sum_block + entry.offsets[t]) % d.blocks, entry.coeffs[t]);
        }
        if (!hit) {
            throw std::logic_error("plan sum does not contain the wanted component");
        }
        decoded[target] = value;
    }

    std::vector<FieldElement> out;
    out.reserve(d.dimension);
    for (std::uint32_t v : decoded) out.emplace_back(v, field);
    return out;
}

/// Brute-force correctness oracle: treats the broadcast equations as a linear
/// system over every message symbol the receiver does not hold and reports
/// x_k only when the system pins it down uniquely. Decoding structure is
/// precomputed so repeated trials against one receiver stay cheap.
class OracleDecoder {
public:
    OracleDecoder(const CodeSpec& spec, std::size_t receiver)
        : OracleDecoder(spec, receiver, spec.length()) {}

    /// `equations` may be smaller than the code length to model a truncated
    /// broadcast (only the first `equations` symbols were received).
    OracleDecoder(const CodeSpec& spec, std::size_t receiver, std::size_t equations)
        : spec_(&spec), receiver_(receiver), equations_(equations) {
        const ProblemParams& params = spec.params();
        if (receiver >= params.message_count()) {
            throw std::invalid_argument("receiver index out of range");
        }
        if (equations > spec.length()) {
            throw std::invalid_argument("cannot use more equations than broadcast symbols");
        }
        const DerivedParams& d = spec.derived();

        const std::vector<std::size_t> held = side_info(params, receiver);
        std::vector<bool> is_held(params.message_count(), false);
        for (std::size_t m : held) is_held[m] = true;
        for (std::size_t m = 0; m < params.message_count(); ++m) {
            if (!is_held[m]) unknown_messages_.push_back(m);
        }

        const std::size_t cols = unknown_messages_.size() * d.dimension;
        FieldMatrix aug(equations_, cols + equations_, spec.field());
        for (std::size_t u = 0; u < unknown_messages_.size(); ++u) {
            for (std::size_t c = 0; c < d.dimension; ++c) {
                const std::size_t row = spec.carrier_row(unknown_messages_[u], c);
                for (std::size_t j = 0; j < equations_; ++j) {
                    aug.set_raw(j, u * d.dimension + c, spec.air().raw(row, j));
                }
            }
        }
        for (std::size_t j = 0; j < equations_; ++j) aug.set_raw(j, cols + j, 1);

        RowEchelon re = reduced_row_echelon(std::move(aug), cols);
        rank_ = re.rank;
        std::vector<std::size_t> pivot_row_of_col(cols, SIZE_MAX);
        std::vector<bool> is_pivot(cols, false);
        for (std::size_t p = 0; p < re.pivot_cols.size(); ++p) {
            pivot_row_of_col[re.pivot_cols[p]] = p;
            is_pivot[re.pivot_cols[p]] = true;
        }

        transform_.assign(equations_ * equations_, 0);
        for (std::size_t r = 0; r < equations_; ++r) {
            for (std::size_t j = 0; j < equations_; ++j) {
                transform_[r * equations_ + j] = re.reduced.raw(r, cols + j);
            }
        }

        // Receiver's own message sits at a known place in the unknown list.
        std::size_t self_index = SIZE_MAX;
        for (std::size_t u = 0; u < unknown_messages_.size(); ++u) {
            if (unknown_messages_[u] == receiver) self_index = u;
        }
        component_rows_.assign(d.dimension, SIZE_MAX);
        decodable_ = true;
        for (std::size_t c = 0; c < d.dimension; ++c) {
            const std::size_t col = self_index * d.dimension + c;
            const std::size_t pr = pivot_row_of_col[col];
            if (pr == SIZE_MAX) {
                decodable_ = false;
                continue;
            }
            bool unique = true;
            for (std::size_t f = 0; f < cols; ++f) {
                if (!is_pivot[f] && re.reduced.raw(pr, f) != 0) {
                    unique = false;
                    break;
                }
            }
            if (!unique) {
                decodable_ = false;
                continue;
            }
            component_rows_[c] = pr;
        }
    }

    [[nodiscard]] bool decodable() const noexcept { return decodable_; }

    [[nodiscard]] std::vector<FieldElement> decode(const std::vector<FieldElement>& codeword,
                                                   const SideInformation& known) const {
        const CodeSpec& spec = *spec_;
        const PrimeField& field = spec.field();
        const DerivedParams& d = spec.derived();
        detail::check_codeword(spec, codeword, equations_);
        detail::check_side_information(spec.params(), field, d.dimension, receiver_, known);
        if (!decodable_) {
            throw std::runtime_error("code not decodable for receiver " +
                                     std::to_string(receiver_));
        }

        // Move the held messages to the right-hand side.
        std::vector<std::uint32_t> rhs(equations_);
        for (std::size_t j = 0; j < equations_; ++j) rhs[j] = codeword[j].value();
        for (const auto& [m, values] : known) {
            for (std::size_t c = 0; c < d.dimension; ++c) {
                const std::uint32_t v = values[c].value();
                if (v == 0) continue;
                for (const auto& [col, val] : spec.air_row_support(spec.carrier_row(m, c))) {
                    if (col < equations_) rhs[col] = field.sub(rhs[col], field.mul(val, v));
                }
            }
        }

        std::vector<std::uint32_t> reduced_rhs(equations_);
        for (std::size_t r = 0; r < equations_; ++r) {
            reduced_rhs[r] = detail::dot(
                field, equations_, [&](std::size_t j) { return transform_[r * equations_ + j]; },
                [&](std::size_t j) { return rhs[j]; });
        }
        for (std::size_t r = rank_; r < equations_; ++r) {
            if (reduced_rhs[r] != 0) {
                throw std::invalid_argument("broadcast symbols inconsistent with side information");
            }
        }

        std::vector<FieldElement> out;
        out.reserve(d.dimension);
        for (std::size_t c = 0; c < d.dimension; ++c) {
            out.emplace_back(reduced_rhs[component_rows_[c]], field);
        }
        return out;
    }

private:
    const CodeSpec* spec_;
    std::size_t receiver_;
    std::size_t equations_;
    std::size_t rank_ = 0;
    bool decodable_ = false;
    std::vector<std::size_t> unknown_messages_;
    std::vector<std::size_t> component_rows_;
    std::vector<std::uint32_t> transform_;
};

/// One-shot oracle decode. Accepts a codeword prefix shorter than the full
/// broadcast, in which case only the received equations constrain the system.
inline std::vector<FieldElement> oracle_decode(std::size_t receiver,
                                               const std::vector<FieldElement>& codeword,
                                               const SideInformation& known,
                                               const CodeSpec& spec) {
    if (codeword.size() > spec.length()) {
        throw std::invalid_argument("codeword longer than the code");
    }
    return OracleDecoder(spec, receiver, codeword.size()).decode(codeword, known);
}

/// (message, component) pairs carried by reduced symbol y_s, sorted.
inline std::vector<std::pair<std::size_t, std::size_t>> reduced_symbol_support(
    const CodeSpec& spec, std::size_t s) {
    const DerivedParams& d = spec.derived();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(std::size_t(d.dimension) * d.group);
    for (std::size_t c = 0; c < d.dimension; ++c) {
        const std::size_t grp = (s + d.blocks - c) % d.blocks;
        for (std::size_t j = 0; j < d.group; ++j) {
            out.emplace_back(grp * d.group + j, c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Message-symbol expansion of plan sum S_s: ((message, component), coeff)
/// triples sorted by symbol.
inline std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::uint32_t>>
plan_sum_symbols(const CodeSpec& spec, const DecodingPlan& plan, std::size_t s) {
    const PlanEntry& entry = plan.entry(s);
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::uint32_t>> out;
    auto expand = [&](std::size_t block, std::uint32_t coeff) {
        for (const auto& sym : reduced_symbol_support(spec, block)) {
            out.emplace_back(sym, coeff);
        }
    };
    expand(s, 1);
    for (std::size_t t = 0; t < entry.offsets.size(); ++t) {
        expand((s + entry.offsets[t]) % spec.blocks(), entry.coeffs[t]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace suicp
