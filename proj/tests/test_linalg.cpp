#include <doctest.h>

#include "suicp/linalg.hpp"
#include "suicp/simulation.hpp"

using namespace suicp;

namespace {

FieldMatrix random_matrix(std::size_t rows, std::size_t cols, const PrimeField& f,
                          SplitMix64& rng) {
    FieldMatrix m(rows, cols, f);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m.set_raw(r, c, static_cast<std::uint32_t>(rng.below(f.modulus())));
        }
    }
    return m;
}

std::vector<FieldElement> random_vector(std::size_t n, const PrimeField& f, SplitMix64& rng) {
    std::vector<FieldElement> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        v.emplace_back(static_cast<std::uint32_t>(rng.below(f.modulus())), f);
    }
    return v;
}

// The 8x5 construction matrix, written out entry by entry.
const char* k8x5 =
    "1 0 0 0 0\n"
    "0 1 0 0 0\n"
    "0 0 1 0 0\n"
    "0 0 0 1 0\n"
    "0 0 0 0 1\n"
    "1 0 0 1 0\n"
    "0 1 0 0 1\n"
    "0 0 1 1 1\n";

}  // namespace

TEST_CASE("rank") {
    CHECK(rank(FieldMatrix::identity(3, PrimeField(2))) == 3);
    CHECK(rank(FieldMatrix(2, 4, PrimeField(3))) == 0);
    CHECK(rank(matrix_from_text(k8x5, PrimeField(2))) == 5);
}

TEST_CASE("rank is invariant under row permutation") {
    SplitMix64 rng(11);
    for (std::uint32_t q : {2u, 3u, 5u}) {
        const PrimeField f(q);
        for (int it = 0; it < 20; ++it) {
            const std::size_t rows = 1 + rng.below(8), cols = 1 + rng.below(8);
            FieldMatrix m = random_matrix(rows, cols, f, rng);
            const std::size_t base = rank(m);
            FieldMatrix shuffled(rows, cols, f);
            std::vector<std::size_t> perm(rows);
            for (std::size_t i = 0; i < rows; ++i) perm[i] = i;
            for (std::size_t i = rows; i > 1; --i) {
                std::swap(perm[i - 1], perm[rng.below(i)]);
            }
            for (std::size_t r = 0; r < rows; ++r) {
                for (std::size_t c = 0; c < cols; ++c) {
                    shuffled.set_raw(r, c, m.raw(perm[r], c));
                }
            }
            CHECK(rank(shuffled) == base);
        }
    }
}

TEST_CASE("solve on worked examples") {
    const PrimeField f2(2), f3(3);
    const FieldMatrix id3 = FieldMatrix::identity(3, f2);
    const std::vector<FieldElement> b{f2.element(1), f2.element(0), f2.element(1)};
    CHECK(solve(id3, b) == b);

    FieldMatrix ones(2, 2, f2);
    for (std::size_t r = 0; r < 2; ++r) {
        ones.set_raw(r, 0, 1);
        ones.set_raw(r, 1, 1);
    }
    CHECK_FALSE(solve(ones, {f2.element(1), f2.element(0)}).has_value());

    FieldMatrix tri(2, 2, f3);
    tri.set_raw(0, 0, 1);
    tri.set_raw(0, 1, 1);
    tri.set_raw(1, 1, 1);
    const auto x = solve(tri, {f3.element(2), f3.element(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0].value() == 1);
    CHECK((*x)[1].value() == 1);
}

TEST_CASE("solve sets free variables to zero") {
    const PrimeField f3(3);
    FieldMatrix wide(1, 2, f3);
    wide.set_raw(0, 0, 1);
    wide.set_raw(0, 1, 1);
    const auto x = solve(wide, {f3.element(2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0].value() == 2);
    CHECK((*x)[1].value() == 0);
}

TEST_CASE("solve rejects mismatched dimensions") {
    const PrimeField f2(2);
    CHECK_THROWS_AS(solve(FieldMatrix::identity(3, f2), {f2.element(1)}),
                    std::invalid_argument);
}

TEST_CASE("every returned solution re-substitutes") {
    SplitMix64 rng(23);
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        const PrimeField f(q);
        for (int it = 0; it < 40; ++it) {
            const std::size_t rows = 1 + rng.below(7), cols = 1 + rng.below(7);
            const FieldMatrix a = random_matrix(rows, cols, f, rng);
            // Half the time b is consistent by construction.
            std::vector<FieldElement> b;
            if (it % 2 == 0) {
                b = matrix_times_vec(a, random_vector(cols, f, rng));
            } else {
                b = random_vector(rows, f, rng);
            }
            const auto x = solve(a, b);
            if (it % 2 == 0) REQUIRE(x.has_value());
            if (x) CHECK(matrix_times_vec(a, *x) == b);
        }
    }
}

TEST_CASE("cyclic window independence") {
    const FieldMatrix air8x7 = matrix_from_text(
        "1 0 0 0 0 0 0\n0 1 0 0 0 0 0\n0 0 1 0 0 0 0\n0 0 0 1 0 0 0\n"
        "0 0 0 0 1 0 0\n0 0 0 0 0 1 0\n0 0 0 0 0 0 1\n1 1 1 1 1 1 1\n",
        PrimeField(2));
    CHECK(cyclic_window_independent(air8x7, 0, 7));
    CHECK(cyclic_window_independent(air8x7, 5, 7));

    FieldMatrix ones(2, 2, PrimeField(2));
    for (std::size_t r = 0; r < 2; ++r) {
        ones.set_raw(r, 0, 1);
        ones.set_raw(r, 1, 1);
    }
    CHECK_FALSE(cyclic_window_independent(ones, 0, 2));
    CHECK_THROWS_AS(cyclic_window_independent(ones, 0, 3), std::invalid_argument);
}

TEST_CASE("matrix text format round trips") {
    SplitMix64 rng(5);
    const PrimeField f5(5);
    const FieldMatrix m = random_matrix(4, 6, f5, rng);
    CHECK(matrix_from_text(to_text(m), f5) == m);

    CHECK_THROWS_AS(matrix_from_text("1 0\n1\n", PrimeField(2)), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_text("2 0\n", PrimeField(2)), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_text("", PrimeField(2)), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_text("1 x\n", PrimeField(2)), std::invalid_argument);
}

TEST_CASE("entries are range-checked against the field") {
    FieldMatrix m(1, 1, PrimeField(3));
    CHECK_THROWS_AS(m.set_raw(0, 0, 3), std::invalid_argument);
    m.set_raw(0, 0, 2);
    CHECK_THROWS_AS(static_cast<void>(m.reinterpret(PrimeField(2))), std::invalid_argument);
    CHECK(m.reinterpret(PrimeField(5)).raw(0, 0) == 2);
}
