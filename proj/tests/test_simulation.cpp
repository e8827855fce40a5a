#include <doctest.h>

#include "suicp/simulation.hpp"

using namespace suicp;

TEST_CASE("splitmix64 is the published sequence") {
    // First three outputs for seed 1234567.
    SplitMix64 rng(1234567);
    CHECK(rng.next() == 6457827717110365317ull);
    CHECK(rng.next() == 3203168211198807973ull);
    CHECK(rng.next() == 9817491932198370423ull);
}

TEST_CASE("random blocks are reproducible and in range") {
    const ProblemParams p(8, 2, 1);
    const PrimeField f5(5);
    SplitMix64 a(9), b(9);
    const MessageBlock ma = random_message_block(p, f5, a);
    const MessageBlock mb = random_message_block(p, f5, b);
    CHECK(ma == mb);
    for (std::size_t k = 0; k < 8; ++k) {
        for (std::size_t c = 0; c < 2; ++c) CHECK(ma.raw(k, c) < 5);
    }
}

TEST_CASE("simulation reports are byte-for-byte deterministic") {
    const ProblemParams p(8, 2, 1);
    const SimulationReport r1 = simulate(p, PrimeField(2), 20, 7);
    const SimulationReport r2 = simulate(p, PrimeField(2), 20, 7);
    CHECK(to_text(r1) == to_text(r2));
    CHECK(to_json(r1) == to_json(r2));
    const SimulationReport r3 = simulate(p, PrimeField(2), 20, 8);
    CHECK(to_text(r1) != to_text(r3));
}

TEST_CASE("randomized rounds decode cleanly") {
    const SimulationReport a = simulate(ProblemParams(8, 2, 1), PrimeField(2), 100, 7);
    CHECK(a.failures.empty());
    CHECK(a.decode_count == 800);
    CHECK(a.rate == Rate(2, 7));

    const SimulationReport b = simulate(ProblemParams(22, 7, 3), PrimeField(3), 50, 1);
    CHECK(b.failures.empty());
    CHECK(b.decode_count == 50 * 22);
    CHECK(b.rate == capacity(ProblemParams(22, 7, 3)));

    const SimulationReport c = simulate(ProblemParams(2, 0, 0), PrimeField(2), 1, 0);
    CHECK(c.failures.empty());
    CHECK(c.derived.length == 2);
}

TEST_CASE("report text carries the header fields") {
    const std::string text = to_text(simulate(ProblemParams(8, 2, 1), PrimeField(2), 3, 7));
    CHECK(text.find("suicp-simulation v1\n") == 0);
    CHECK(text.find("K: 8\n") != std::string::npos);
    CHECK(text.find("trials: 3\n") != std::string::npos);
    CHECK(text.find("seed: 7\n") != std::string::npos);
    CHECK(text.find("rate: 2/7\n") != std::string::npos);
    CHECK(text.find("failures: 0\n") != std::string::npos);
}
