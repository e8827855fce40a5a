#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "suicp/air.hpp"
#include "suicp/codec.hpp"
#include "suicp/problem.hpp"

// Built-in known-answer corpus: construction matrices, code listings,
// decoding tables and parameter sheets with independently tabulated expected
// values. `verify-examples` re-derives everything and compares bit-exactly.

namespace suicp::reference {

struct AirMatrixCase {
    std::string name;
    std::size_t rows;
    std::size_t cols;
    std::string matrix_text;
};

struct EncodingMatrixCase {
    std::string name;
    std::uint32_t k, d, u;
    std::string matrix_text;
};

/// Expected support of each broadcast symbol as (message, component) pairs,
/// for the binary field where every coefficient is one.
struct CodeListingCase {
    std::string name;
    std::uint32_t k, d, u;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> symbols;
};

struct PlanTableRow {
    std::vector<std::uint32_t> tau;
    std::vector<std::uint32_t> offsets;
    std::vector<std::uint32_t> coeffs;
};

struct PlanTableCase {
    std::string name;
    std::uint32_t k, d, u;
    std::vector<PlanTableRow> rows;
};

struct ParameterCase {
    std::string name;
    std::uint32_t k, d, u;
    Rate cap;
    DerivedParams derived;
    bool minimal_certified;
};

struct Corpus {
    std::vector<AirMatrixCase> air_matrices;
    std::vector<EncodingMatrixCase> encoding_matrices;
    std::vector<CodeListingCase> listings;
    std::vector<PlanTableCase> plan_tables;
    std::vector<ParameterCase> parameters;
};

inline Corpus default_corpus() {
    Corpus c;

    c.air_matrices.push_back({"air-8x7", 8, 7,
                              "1 0 0 0 0 0 0\n"
                              "0 1 0 0 0 0 0\n"
                              "0 0 1 0 0 0 0\n"
                              "0 0 0 1 0 0 0\n"
                              "0 0 0 0 1 0 0\n"
                              "0 0 0 0 0 1 0\n"
                              "0 0 0 0 0 0 1\n"
                              "1 1 1 1 1 1 1\n"});
    c.air_matrices.push_back({"air-11x9", 11, 9,
                              "1 0 0 0 0 0 0 0 0\n"
                              "0 1 0 0 0 0 0 0 0\n"
                              "0 0 1 0 0 0 0 0 0\n"
                              "0 0 0 1 0 0 0 0 0\n"
                              "0 0 0 0 1 0 0 0 0\n"
                              "0 0 0 0 0 1 0 0 0\n"
                              "0 0 0 0 0 0 1 0 0\n"
                              "0 0 0 0 0 0 0 1 0\n"
                              "0 0 0 0 0 0 0 0 1\n"
                              "1 0 1 0 1 0 1 0 1\n"
                              "0 1 0 1 0 1 0 1 1\n"});
    c.air_matrices.push_back({"air-8x5", 8, 5,
                              "1 0 0 0 0\n"
                              "0 1 0 0 0\n"
                              "0 0 1 0 0\n"
                              "0 0 0 1 0\n"
                              "0 0 0 0 1\n"
                              "1 0 0 1 0\n"
                              "0 1 0 0 1\n"
                              "0 0 1 1 1\n"});
    c.air_matrices.push_back({"air-7x6", 7, 6,
                              "1 0 0 0 0 0\n"
                              "0 1 0 0 0 0\n"
                              "0 0 1 0 0 0\n"
                              "0 0 0 1 0 0\n"
                              "0 0 0 0 1 0\n"
                              "0 0 0 0 0 1\n"
                              "1 1 1 1 1 1\n"});
    c.air_matrices.push_back({"air-11x8", 11, 8,
                              "1 0 0 0 0 0 0 0\n"
                              "0 1 0 0 0 0 0 0\n"
                              "0 0 1 0 0 0 0 0\n"
                              "0 0 0 1 0 0 0 0\n"
                              "0 0 0 0 1 0 0 0\n"
                              "0 0 0 0 0 1 0 0\n"
                              "0 0 0 0 0 0 1 0\n"
                              "0 0 0 0 0 0 0 1\n"
                              "1 0 0 1 0 0 1 0\n"
                              "0 1 0 0 1 0 0 1\n"
                              "0 0 1 0 0 1 1 1\n"});
    c.air_matrices.push_back({"air-7x5", 7, 5,
                              "1 0 0 0 0\n"
                              "0 1 0 0 0\n"
                              "0 0 1 0 0\n"
                              "0 0 0 1 0\n"
                              "0 0 0 0 1\n"
                              "1 0 1 0 1\n"
                              "0 1 0 1 1\n"});
    // 6x5: identity on top, all-ones last row. A commonly reprinted variant
    // carries a spurious all-zero sixth row; the construction has none.
    c.air_matrices.push_back({"air-6x5", 6, 5,
                              "1 0 0 0 0\n"
                              "0 1 0 0 0\n"
                              "0 0 1 0 0\n"
                              "0 0 0 1 0\n"
                              "0 0 0 0 1\n"
                              "1 1 1 1 1\n"});
    c.air_matrices.push_back({"air-9x8", 9, 8,
                              "1 0 0 0 0 0 0 0\n"
                              "0 1 0 0 0 0 0 0\n"
                              "0 0 1 0 0 0 0 0\n"
                              "0 0 0 1 0 0 0 0\n"
                              "0 0 0 0 1 0 0 0\n"
                              "0 0 0 0 0 1 0 0\n"
                              "0 0 0 0 0 0 1 0\n"
                              "0 0 0 0 0 0 0 1\n"
                              "1 1 1 1 1 1 1 1\n"});

    c.encoding_matrices.push_back({"encoding-16x7", 8, 2, 1,
                                   "1 0 0 0 0 0 0\n"
                                   "0 1 0 0 0 0 0\n"
                                   "0 1 0 0 0 0 0\n"
                                   "0 0 1 0 0 0 0\n"
                                   "0 0 1 0 0 0 0\n"
                                   "0 0 0 1 0 0 0\n"
                                   "0 0 0 1 0 0 0\n"
                                   "0 0 0 0 1 0 0\n"
                                   "0 0 0 0 1 0 0\n"
                                   "0 0 0 0 0 1 0\n"
                                   "0 0 0 0 0 1 0\n"
                                   "0 0 0 0 0 0 1\n"
                                   "0 0 0 0 0 0 1\n"
                                   "1 1 1 1 1 1 1\n"
                                   "1 1 1 1 1 1 1\n"
                                   "1 0 0 0 0 0 0\n"});
    c.encoding_matrices.push_back({"encoding-44x9", 22, 7, 3,
                                   "1 0 0 0 0 0 0 0 0\n"
                                   "0 1 0 0 0 0 0 0 0\n"
                                   "1 0 0 0 0 0 0 0 0\n"
                                   "0 1 0 0 0 0 0 0 0\n"
                                   "0 1 0 0 0 0 0 0 0\n"
                                   "0 0 1 0 0 0 0 0 0\n"
                                   "0 1 0 0 0 0 0 0 0\n"
                                   "0 0 1 0 0 0 0 0 0\n"
                                   "0 0 1 0 0 0 0 0 0\n"
                                   "0 0 0 1 0 0 0 0 0\n"
                                   "0 0 1 0 0 0 0 0 0\n"
                                   "0 0 0 1 0 0 0 0 0\n"
                                   "0 0 0 1 0 0 0 0 0\n"
                                   "0 0 0 0 1 0 0 0 0\n"
                                   "0 0 0 1 0 0 0 0 0\n"
                                   "0 0 0 0 1 0 0 0 0\n"
                                   "0 0 0 0 1 0 0 0 0\n"
                                   "0 0 0 0 0 1 0 0 0\n"
                                   "0 0 0 0 1 0 0 0 0\n"
                                   "0 0 0 0 0 1 0 0 0\n"
                                   "0 0 0 0 0 1 0 0 0\n"
                                   "0 0 0 0 0 0 1 0 0\n"
                                   "0 0 0 0 0 1 0 0 0\n"
                                   "0 0 0 0 0 0 1 0 0\n"
                                   "0 0 0 0 0 0 1 0 0\n"
                                   "0 0 0 0 0 0 0 1 0\n"
                                   "0 0 0 0 0 0 1 0 0\n"
                                   "0 0 0 0 0 0 0 1 0\n"
                                   "0 0 0 0 0 0 0 1 0\n"
                                   "0 0 0 0 0 0 0 0 1\n"
                                   "0 0 0 0 0 0 0 1 0\n"
                                   "0 0 0 0 0 0 0 0 1\n"
                                   "0 0 0 0 0 0 0 0 1\n"
                                   "1 0 1 0 1 0 1 0 1\n"
                                   "0 0 0 0 0 0 0 0 1\n"
                                   "1 0 1 0 1 0 1 0 1\n"
                                   "1 0 1 0 1 0 1 0 1\n"
                                   "0 1 0 1 0 1 0 1 1\n"
                                   "1 0 1 0 1 0 1 0 1\n"
                                   "0 1 0 1 0 1 0 1 1\n"
                                   "0 1 0 1 0 1 0 1 1\n"
                                   "1 0 0 0 0 0 0 0 0\n"
                                   "0 1 0 1 0 1 0 1 1\n"
                                   "1 0 0 0 0 0 0 0 0\n"});
    c.encoding_matrices.push_back({"encoding-24x5", 24, 11, 2,
                                   "1 0 0 0 0\n"
                                   "1 0 0 0 0\n"
                                   "1 0 0 0 0\n"
                                   "0 1 0 0 0\n"
                                   "0 1 0 0 0\n"
                                   "0 1 0 0 0\n"
                                   "0 0 1 0 0\n"
                                   "0 0 1 0 0\n"
                                   "0 0 1 0 0\n"
                                   "0 0 0 1 0\n"
                                   "0 0 0 1 0\n"
                                   "0 0 0 1 0\n"
                                   "0 0 0 0 1\n"
                                   "0 0 0 0 1\n"
                                   "0 0 0 0 1\n"
                                   "1 0 0 1 0\n"
                                   "1 0 0 1 0\n"
                                   "1 0 0 1 0\n"
                                   "0 1 0 0 1\n"
                                   "0 1 0 0 1\n"
                                   "0 1 0 0 1\n"
                                   "0 0 1 1 1\n"
                                   "0 0 1 1 1\n"
                                   "0 0 1 1 1\n"});

    using Sym = std::vector<std::pair<std::size_t, std::size_t>>;
    c.listings.push_back(
        {"listing-24-11-2",
         24,
         11,
         2,
         {Sym{{0, 0}, {1, 0}, {2, 0}, {15, 0}, {16, 0}, {17, 0}},
          Sym{{3, 0}, {4, 0}, {5, 0}, {18, 0}, {19, 0}, {20, 0}},
          Sym{{6, 0}, {7, 0}, {8, 0}, {21, 0}, {22, 0}, {23, 0}},
          Sym{{9, 0}, {10, 0}, {11, 0}, {15, 0}, {16, 0}, {17, 0}, {21, 0}, {22, 0}, {23, 0}},
          Sym{{12, 0}, {13, 0}, {14, 0}, {18, 0}, {19, 0}, {20, 0}, {21, 0}, {22, 0}, {23, 0}}}});
    c.listings.push_back({"listing-7-2-0",
                          7,
                          2,
                          0,
                          {Sym{{0, 0}, {5, 0}}, Sym{{1, 0}, {6, 0}}, Sym{{2, 0}, {5, 0}},
                           Sym{{3, 0}, {6, 0}}, Sym{{4, 0}, {5, 0}, {6, 0}}}});
    c.listings.push_back({"listing-14-3-1",
                          14,
                          3,
                          1,
                          {Sym{{0, 0}, {1, 0}, {12, 0}, {13, 0}},
                           Sym{{2, 0}, {3, 0}, {12, 0}, {13, 0}},
                           Sym{{4, 0}, {5, 0}, {12, 0}, {13, 0}},
                           Sym{{6, 0}, {7, 0}, {12, 0}, {13, 0}},
                           Sym{{8, 0}, {9, 0}, {12, 0}, {13, 0}},
                           Sym{{10, 0}, {11, 0}, {12, 0}, {13, 0}}}});
    c.listings.push_back({"listing-8-2-1",
                          8,
                          2,
                          1,
                          {Sym{{0, 0}, {6, 1}, {7, 0}, {7, 1}},
                           Sym{{0, 1}, {1, 0}, {6, 1}, {7, 0}},
                           Sym{{1, 1}, {2, 0}, {6, 1}, {7, 0}},
                           Sym{{2, 1}, {3, 0}, {6, 1}, {7, 0}},
                           Sym{{3, 1}, {4, 0}, {6, 1}, {7, 0}},
                           Sym{{4, 1}, {5, 0}, {6, 1}, {7, 0}},
                           Sym{{5, 1}, {6, 0}, {6, 1}, {7, 0}}}});
    // The nine broadcast symbols for K=22, D=7, U=3. The second-component
    // half of the last block is x_{18,2}+x_{19,2} everywhere it appears.
    c.listings.push_back(
        {"listing-22-7-3",
         22,
         7,
         3,
         {Sym{{0, 0}, {1, 0}, {16, 1}, {17, 1}, {18, 0}, {19, 0}, {20, 1}, {21, 1}},
          Sym{{0, 1}, {1, 1}, {2, 0}, {3, 0}, {18, 1}, {19, 1}, {20, 0}, {21, 0}},
          Sym{{2, 1}, {3, 1}, {4, 0}, {5, 0}, {16, 1}, {17, 1}, {18, 0}, {19, 0}},
          Sym{{4, 1}, {5, 1}, {6, 0}, {7, 0}, {18, 1}, {19, 1}, {20, 0}, {21, 0}},
          Sym{{6, 1}, {7, 1}, {8, 0}, {9, 0}, {16, 1}, {17, 1}, {18, 0}, {19, 0}},
          Sym{{8, 1}, {9, 1}, {10, 0}, {11, 0}, {18, 1}, {19, 1}, {20, 0}, {21, 0}},
          Sym{{10, 1}, {11, 1}, {12, 0}, {13, 0}, {16, 1}, {17, 1}, {18, 0}, {19, 0}},
          Sym{{12, 1}, {13, 1}, {14, 0}, {15, 0}, {18, 1}, {19, 1}, {20, 0}, {21, 0}},
          Sym{{14, 1}, {15, 1}, {16, 0}, {17, 0}, {16, 1}, {17, 1}, {18, 0}, {19, 0},
              {18, 1}, {19, 1}, {20, 0}, {21, 0}}}});
    c.listings.push_back(
        {"listing-11-5-2",
         11,
         5,
         2,
         {Sym{{0, 0}, {6, 2}, {7, 1}, {8, 0}, {9, 2}, {10, 1}},
          Sym{{0, 1}, {1, 0}, {7, 2}, {8, 1}, {9, 0}, {10, 2}},
          Sym{{0, 2}, {1, 1}, {2, 0}, {8, 2}, {9, 1}, {10, 0}},
          Sym{{1, 2}, {2, 1}, {3, 0}, {6, 2}, {7, 1}, {8, 0}},
          Sym{{2, 2}, {3, 1}, {4, 0}, {7, 2}, {8, 1}, {9, 0}},
          Sym{{3, 2}, {4, 1}, {5, 0}, {8, 2}, {9, 1}, {10, 0}},
          Sym{{4, 2}, {5, 1}, {6, 0}, {6, 2}, {7, 1}, {8, 0}, {8, 2}, {9, 1}, {10, 0}},
          Sym{{5, 2}, {6, 1}, {7, 0}, {7, 2}, {8, 1}, {9, 0}, {8, 2}, {9, 1}, {10, 0}}}});

    c.plan_tables.push_back({"plan-table-8-1",
                             8,
                             2,
                             1,
                             {PlanTableRow{{0, 1}, {1}, {1}}, PlanTableRow{{1, 2}, {1}, {1}},
                              PlanTableRow{{2, 3}, {1}, {1}}, PlanTableRow{{3, 4}, {1}, {1}},
                              PlanTableRow{{4, 5}, {1}, {1}}, PlanTableRow{{5, 6}, {1}, {1}},
                              PlanTableRow{{6}, {1}, {1}}, PlanTableRow{{0}, {1}, {1}}}});
    // Row 0 is S_0 = y_0 + y_2, consistent with its tau column {c_0, c_2}.
    c.plan_tables.push_back({"plan-table-11-2",
                             22,
                             7,
                             3,
                             {PlanTableRow{{0, 2}, {2}, {1}}, PlanTableRow{{1, 3}, {2}, {1}},
                              PlanTableRow{{2, 4}, {2}, {1}}, PlanTableRow{{3, 5}, {2}, {1}},
                              PlanTableRow{{4, 6}, {2}, {1}}, PlanTableRow{{5, 7}, {2}, {1}},
                              PlanTableRow{{6, 7, 8}, {1, 2}, {1, 1}},
                              PlanTableRow{{7, 8}, {1, 2}, {1, 1}},
                              PlanTableRow{{8}, {1, 2}, {1, 1}}, PlanTableRow{{0}, {2}, {1}},
                              PlanTableRow{{1}, {2}, {1}}}});

    c.parameters.push_back({"params-8-2-1", 8, 2, 1, Rate(2, 7), {1, 2, 1, 8, 7}, true});
    c.parameters.push_back({"params-22-7-3", 22, 7, 3, Rate(2, 9), {2, 2, 2, 11, 9}, true});
    c.parameters.push_back({"params-24-11-2", 24, 11, 2, Rate(1, 5), {3, 1, 3, 8, 5}, true});
    c.parameters.push_back({"params-14-3-1", 14, 3, 1, Rate(1, 6), {2, 1, 1, 7, 6}, true});
    c.parameters.push_back({"params-11-5-2", 11, 5, 2, Rate(3, 8), {1, 3, 3, 11, 8}, true});
    c.parameters.push_back({"params-7-2-0", 7, 2, 0, Rate(1, 5), {1, 1, 2, 7, 5}, true});
    c.parameters.push_back({"params-12-5-3", 12, 5, 3, Rate(2, 5), {2, 2, 1, 6, 5}, true});
    c.parameters.push_back({"params-27-8-5", 27, 8, 5, Rate(1, 4), {3, 2, 1, 9, 8}, false});

    return c;
}

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;
};

inline CheckResult check(const AirMatrixCase& cs) {
    const FieldMatrix expected = matrix_from_text(cs.matrix_text, PrimeField(2));
    const FieldMatrix got = air_matrix(cs.rows, cs.cols);
    if (got == expected) return {cs.name, true, ""};
    return {cs.name, false, "constructed matrix differs from the recorded one"};
}

inline CheckResult check(const EncodingMatrixCase& cs) {
    const FieldMatrix expected = matrix_from_text(cs.matrix_text, PrimeField(2));
    const CodeSpec spec(ProblemParams(cs.k, cs.d, cs.u), PrimeField(2));
    if (spec.encoding() == expected) return {cs.name, true, ""};
    return {cs.name, false, "encoding matrix differs from the recorded one"};
}

inline CheckResult check(const CodeListingCase& cs) {
    const CodeSpec spec(ProblemParams(cs.k, cs.d, cs.u), PrimeField(2));
    if (cs.symbols.size() != spec.length()) {
        return {cs.name, false, "wrong number of broadcast symbols"};
    }
    for (std::size_t j = 0; j < spec.length(); ++j) {
        std::vector<std::pair<std::size_t, std::size_t>> got;
        for (std::size_t row = 0; row < spec.encoding().rows(); ++row) {
            if (spec.encoding().raw(row, j) != 0) {
                got.emplace_back(row / spec.dimension(), row % spec.dimension());
            }
        }
        auto want = cs.symbols[j];
        std::sort(want.begin(), want.end());
        if (got != want) {
            return {cs.name, false, "broadcast symbol " + std::to_string(j) + " differs"};
        }
    }
    return {cs.name, true, ""};
}

inline CheckResult check(const PlanTableCase& cs) {
    const CodeSpec spec(ProblemParams(cs.k, cs.d, cs.u), PrimeField(2));
    const DecodingPlan plan = decoding_plan(spec);
    if (cs.rows.size() != plan.size()) {
        return {cs.name, false, "wrong number of plan rows"};
    }
    for (std::size_t s = 0; s < plan.size(); ++s) {
        const PlanEntry& e = plan.entry(s);
        if (e.tau() != cs.rows[s].tau || e.offsets != cs.rows[s].offsets ||
            e.coeffs != cs.rows[s].coeffs) {
            return {cs.name, false, "sum " + std::to_string(s) + " differs"};
        }
    }
    return {cs.name, true, ""};
}

inline CheckResult check(const ParameterCase& cs) {
    const ProblemParams p(cs.k, cs.d, cs.u);
    if (capacity(p) != cs.cap) return {cs.name, false, "capacity differs"};
    if (derive(p) != cs.derived) return {cs.name, false, "derived parameters differ"};
    if (minimality_certified(p) != cs.minimal_certified) {
        return {cs.name, false, "minimality certificate differs"};
    }
    return {cs.name, true, ""};
}

inline std::vector<CheckResult> run_all(const Corpus& corpus) {
    std::vector<CheckResult> out;
    for (const auto& cs : corpus.air_matrices) out.push_back(check(cs));
    for (const auto& cs : corpus.encoding_matrices) out.push_back(check(cs));
    for (const auto& cs : corpus.listings) out.push_back(check(cs));
    for (const auto& cs : corpus.plan_tables) out.push_back(check(cs));
    for (const auto& cs : corpus.parameters) out.push_back(check(cs));
    return out;
}

}  // namespace suicp::reference
