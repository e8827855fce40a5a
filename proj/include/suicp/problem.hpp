#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace suicp {

/// Instance of the single unicast index coding problem with symmetric
/// neighboring consecutive side-information, SUICP(SNCS): K messages and K
/// receivers on a cycle; receiver k wants message k and already knows the U
/// messages before it and the D messages after it.
class ProblemParams {
public:
    ProblemParams(std::uint32_t message_count, std::uint32_t side_after,
                  std::uint32_t side_before)
        : message_count_(message_count), side_after_(side_after), side_before_(side_before) {
        if (message_count_ == 0) {
            throw std::invalid_argument("message count must be positive");
        }
        if (side_before_ > side_after_) {
            throw std::invalid_argument("need U <= D, got U=" + std::to_string(side_before_) +
                                        " D=" + std::to_string(side_after_));
        }
        if (std::uint64_t(side_before_) + side_after_ > std::uint64_t(message_count_) - 1) {
            throw std::invalid_argument("need U + D <= K - 1, got U+D=" +
                                        std::to_string(side_before_ + side_after_) +
                                        " K=" + std::to_string(message_count_));
        }
    }

    [[nodiscard]] std::uint32_t message_count() const noexcept { return message_count_; }
    [[nodiscard]] std::uint32_t side_after() const noexcept { return side_after_; }
    [[nodiscard]] std::uint32_t side_before() const noexcept { return side_before_; }

    /// U + D == K - 1: every receiver knows all other messages. Capacity is 1
    /// there while the cyclic construction keeps its generic rate, so callers
    /// attach a warning to generated output.
    [[nodiscard]] bool rate_one_boundary() const noexcept {
        return side_before_ + side_after_ == message_count_ - 1;
    }

    bool operator==(const ProblemParams&) const = default;

private:
    std::uint32_t message_count_;
    std::uint32_t side_after_;
    std::uint32_t side_before_;
};

/// Quantities derived from the gcd reduction a = gcd(K, D-U, U+1):
///   group      a       messages merged into one extended symbol
///   dimension  u_a     symbols per message vector, (U+1)/a
///   window     d_a     reduced forward side-information, (D-U)/a
///   blocks     K_a     extended blocks, K/a
///   length     N       broadcast symbols, K_a - d_a
struct DerivedParams {
    std::uint32_t group;
    std::uint32_t dimension;
    std::uint32_t window;
    std::uint32_t blocks;
    std::uint32_t length;

    bool operator==(const DerivedParams&) const = default;
};

inline DerivedParams derive(const ProblemParams& p) {
    const std::uint32_t k = p.message_count();
    const std::uint32_t spread = p.side_after() - p.side_before();
    const std::uint32_t dim_raw = p.side_before() + 1;
    const std::uint32_t a = std::gcd(std::gcd(k, spread), dim_raw);
    DerivedParams d{};
    d.group = a;
    d.dimension = dim_raw / a;
    d.window = spread / a;
    d.blocks = k / a;
    d.length = d.blocks - d.window;
    return d;
}

/// Reduced positive rational, used for capacities and code rates.
struct Rate {
    std::uint32_t numerator;
    std::uint32_t denominator;

    Rate(std::uint32_t num, std::uint32_t den) {
        if (den == 0) throw std::invalid_argument("rate with zero denominator");
        const std::uint32_t g = std::gcd(num, den);
        numerator = num / g;
        denominator = den / g;
    }

    bool operator==(const Rate&) const = default;

    [[nodiscard]] std::string str() const {
        return std::to_string(numerator) + "/" + std::to_string(denominator);
    }
};

/// Symmetric capacity: 1 when U + D = K - 1, otherwise (U+1)/(K-D+U).
inline Rate capacity(const ProblemParams& p) {
    if (p.rate_one_boundary()) return Rate(1, 1);
    return Rate(p.side_before() + 1,
                p.message_count() - p.side_after() + p.side_before());
}

/// Rate achieved by the constructed code: dimension/length symbols per
/// message. Coincides with capacity whenever U + D <= K - 2.
inline Rate achieved_rate(const DerivedParams& d) { return Rate(d.dimension, d.length); }

/// Side-information set of receiver k: the U message indices before k and the
/// D after it, cyclically. Sorted ascending; never contains k itself.
inline std::vector<std::size_t> side_info(const ProblemParams& p, std::size_t k) {
    const std::size_t n = p.message_count();
    if (k >= n) {
        throw std::invalid_argument("receiver index " + std::to_string(k) + " out of range");
    }
    std::vector<std::size_t> out;
    out.reserve(std::size_t(p.side_before()) + p.side_after());
    for (std::size_t t = 1; t <= p.side_before(); ++t) out.push_back((k + n - t) % n);
    for (std::size_t t = 1; t <= p.side_after(); ++t) out.push_back((k + t) % n);
    std::sort(out.begin(), out.end());
    return out;
}

/// Certificate that the construction's dimension (U+1)/a is minimal among
/// capacity-achieving vector linear codes: holds whenever
/// gcd(K-D+U, U+1) == gcd(K, D-U, U+1). When the gcds differ the minimality
/// question is open and this reports false ("uncertified"), not "non-minimal".
inline bool minimality_certified(const ProblemParams& p) {
    const std::uint32_t lhs =
        std::gcd(p.message_count() - p.side_after() + p.side_before(), p.side_before() + 1);
    const std::uint32_t rhs = std::gcd(
        std::gcd(p.message_count(), p.side_after() - p.side_before()), p.side_before() + 1);
    return lhs == rhs;
}

}  // namespace suicp
