#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "suicp/codec.hpp"
#include "suicp/problem.hpp"

namespace suicp {

/// SplitMix64: the 64-bit mixing generator of Steele, Lea and Flood.
/// Named and fixed so simulation reports reproduce across platforms and
/// implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, bound) by rejection, exactly unbiased.
    std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t limit = bound * (~std::uint64_t(0) / bound);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

private:
    std::uint64_t state_;
};

/// Fills a block with uniform symbols, message-major then component order.
inline MessageBlock random_message_block(const ProblemParams& params, const PrimeField& field,
                                         SplitMix64& rng) {
    MessageBlock block(params, field);
    for (std::size_t k = 0; k < params.message_count(); ++k) {
        for (std::size_t c = 0; c < block.dimension(); ++c) {
            block.set_raw(k, c, static_cast<std::uint32_t>(rng.below(field.modulus())));
        }
    }
    return block;
}

struct SimulationFailure {
    std::uint64_t trial;
    std::size_t receiver;
    std::vector<std::uint32_t> expected;
    std::vector<std::uint32_t> decoded;
    std::vector<std::uint32_t> oracle;

    bool operator==(const SimulationFailure&) const = default;
};

struct SimulationReport {
    ProblemParams params;
    std::uint32_t modulus;
    std::uint64_t trials;
    std::uint64_t seed;
    DerivedParams derived;
    Rate rate;
    std::uint64_t decode_count;
    std::vector<SimulationFailure> failures;
};

/// Runs seeded end-to-end rounds: draw a random block, broadcast it, decode
/// at all K receivers with the interference-cancellation decoder, and
/// cross-check each result against the linear-system oracle. A failure entry
/// is recorded whenever either decoder misses the planted message or the two
/// disagree.
inline SimulationReport simulate(const ProblemParams& params, const PrimeField& field,
                                 std::uint64_t trials, std::uint64_t seed) {
    const CodeSpec spec = build_code(params, field);
    const DecodingPlan plan = decoding_plan(spec);
    const std::size_t receivers = params.message_count();

    std::vector<OracleDecoder> oracles;
    std::vector<SideInformation> known(receivers);
    std::vector<std::vector<std::size_t>> side(receivers);
    oracles.reserve(receivers);
    for (std::size_t k = 0; k < receivers; ++k) {
        oracles.emplace_back(spec, k);
        side[k] = side_info(params, k);
        for (std::size_t m : side[k]) {
            known[k].emplace(m, std::vector<FieldElement>(spec.dimension(), field.zero()));
        }
    }

    SimulationReport report{params,     field.modulus(), trials, seed, spec.derived(),
                            achieved_rate(spec.derived()), 0,     {}};
    SplitMix64 rng(seed);
    auto values_of = [&](const std::vector<FieldElement>& v) {
        std::vector<std::uint32_t> out;
        out.reserve(v.size());
        for (const FieldElement& e : v) out.push_back(e.value());
        return out;
    };
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const MessageBlock block = random_message_block(params, field, rng);
        const std::vector<FieldElement> codeword = encode(block, spec);
        for (std::size_t k = 0; k < receivers; ++k) {
            for (std::size_t m : side[k]) {
                auto& vals = known[k][m];
                for (std::size_t c = 0; c < spec.dimension(); ++c) {
                    vals[c] = block.symbol(m, c);
                }
            }
            const auto expected = block.message(k);
            const auto decoded = receiver_decode(k, codeword, known[k], spec, plan);
            const auto oracle = oracles[k].decode(codeword, known[k]);
            ++report.decode_count;
            if (decoded != expected || oracle != expected) {
                report.failures.push_back(SimulationFailure{trial, k, values_of(expected),
                                                            values_of(decoded),
                                                            values_of(oracle)});
            }
        }
    }
    return report;
}

namespace detail {

inline std::string join_u32(const std::vector<std::uint32_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
    }
    return os.str();
}

}  // namespace detail

inline std::string to_text(const SimulationReport& r) {
    std::ostringstream os;
    os << "suicp-simulation v1\n";
    os << "K: " << r.params.message_count() << '\n';
    os << "D: " << r.params.side_after() << '\n';
    os << "U: " << r.params.side_before() << '\n';
    os << "q: " << r.modulus << '\n';
    os << "trials: " << r.trials << '\n';
    os << "seed: " << r.seed << '\n';
    os << "dimension: " << r.derived.dimension << '\n';
    os << "length: " << r.derived.length << '\n';
    os << "rate: " << r.rate.str() << '\n';
    os << "decodes: " << r.decode_count << '\n';
    os << "failures: " << r.failures.size() << '\n';
    for (const SimulationFailure& f : r.failures) {
        os << "failure: trial " << f.trial << " receiver " << f.receiver << " expected "
           << detail::join_u32(f.expected) << " decoded " << detail::join_u32(f.decoded)
           << " oracle " << detail::join_u32(f.oracle) << '\n';
    }
    return os.str();
}

inline std::string to_json(const SimulationReport& r) {
    nlohmann::ordered_json j;
    j["format"] = "suicp-simulation";
    j["version"] = 1;
    j["K"] = r.params.message_count();
    j["D"] = r.params.side_after();
    j["U"] = r.params.side_before();
    j["q"] = r.modulus;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["dimension"] = r.derived.dimension;
    j["length"] = r.derived.length;
    j["rate"] = r.rate.str();
    j["decodes"] = r.decode_count;
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const SimulationFailure& f : r.failures) {
        failures.push_back({{"trial", f.trial},
                            {"receiver", f.receiver},
                            {"expected", f.expected},
                            {"decoded", f.decoded},
                            {"oracle", f.oracle}});
    }
    j["failures"] = std::move(failures);
    return j.dump(2) + "\n";
}

}  // namespace suicp
