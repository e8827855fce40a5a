#include <doctest.h>

#include "suicp/serialization.hpp"

using namespace suicp;

namespace {

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
    const std::size_t pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("code documents round trip through text") {
    for (const auto& [k, d, u, q] :
         {std::array<std::uint32_t, 4>{8, 2, 1, 2}, std::array<std::uint32_t, 4>{22, 7, 3, 3},
          std::array<std::uint32_t, 4>{24, 11, 2, 2}, std::array<std::uint32_t, 4>{3, 1, 1, 2}}) {
        const GeneratedCode code = generate_code(ProblemParams(k, d, u), PrimeField(q));
        const std::string text = to_text(code);
        const GeneratedCode parsed = generated_code_from_text(text);
        CHECK(to_text(parsed) == text);
        CHECK(parsed.spec == code.spec);
        CHECK(parsed.plan == code.plan);
    }
}

TEST_CASE("code documents round trip through json") {
    const GeneratedCode code = generate_code(ProblemParams(22, 7, 3), PrimeField(2));
    const std::string text = to_json(code);
    const GeneratedCode parsed = generated_code_from_json(text);
    CHECK(to_json(parsed) == text);
    CHECK(parsed.spec == code.spec);
    CHECK(parsed.plan == code.plan);
}

TEST_CASE("boundary documents carry a note and still round trip") {
    const GeneratedCode code = generate_code(ProblemParams(3, 1, 1), PrimeField(2));
    const std::string text = to_text(code);
    CHECK(text.find("note: U+D = K-1 boundary") != std::string::npos);
    CHECK(to_text(generated_code_from_text(text)) == text);
}

TEST_CASE("tampered documents are rejected") {
    const GeneratedCode code = generate_code(ProblemParams(8, 2, 1), PrimeField(2));
    const std::string text = to_text(code);

    CHECK_THROWS_AS(generated_code_from_text(replace_once(text, "length: 7", "length: 6")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        generated_code_from_text(replace_once(text, "capacity: 2/7", "capacity: 1/3")),
        std::invalid_argument);
    // Flip one matrix bit: the air section starts with the identity row.
    CHECK_THROWS_AS(generated_code_from_text(
                        replace_once(text, "air-matrix:\n1 0", "air-matrix:\n0 0")),
                    std::invalid_argument);
    CHECK_THROWS_AS(generated_code_from_text(replace_once(text, "suicp-code v1", "other v1")),
                    std::invalid_argument);
    CHECK_THROWS_AS(generated_code_from_text(text + "extra\n"), std::invalid_argument);
}

TEST_CASE("message files round trip") {
    const ProblemParams p(8, 2, 1);
    const PrimeField f3(3);
    MessageBlock block(p, f3);
    for (std::size_t k = 0; k < 8; ++k) {
        block.set_raw(k, 0, static_cast<std::uint32_t>(k % 3));
        block.set_raw(k, 1, static_cast<std::uint32_t>((k + 1) % 3));
    }
    const std::string text = to_text(block);
    CHECK(text.substr(0, 8) == "3 8 2 1\n");
    const MessageBlock parsed = message_block_from_text(text);
    CHECK(parsed == block);
    CHECK(to_text(parsed) == text);
}

TEST_CASE("malformed message files are rejected") {
    CHECK_THROWS_AS(message_block_from_text("2 8 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(message_block_from_text("4 8 2 1\n"), std::invalid_argument);  // q not prime
    CHECK_THROWS_AS(message_block_from_text("2 8 2 1\n1 1\n"), std::invalid_argument);
    const std::string bad_symbol = "2 2 0 0\n1\n2\n";
    CHECK_THROWS_AS(message_block_from_text(bad_symbol), std::invalid_argument);
    const std::string excess = "2 2 0 0\n1 1\n0\n";
    CHECK_THROWS_AS(message_block_from_text(excess), std::invalid_argument);
}

TEST_CASE("codeword files round trip") {
    const ProblemParams p(7, 2, 0);
    const PrimeField f2(2);
    const std::vector<FieldElement> cw{f2.element(1), f2.element(0), f2.element(1),
                                       f2.element(1), f2.element(0)};
    const std::string text = codeword_to_text(p, f2, cw);
    CHECK(text == "2 7 2 0\n1 0 1 1 0\n");
    const CodewordFile parsed = codeword_from_text(text);
    CHECK(parsed.params == p);
    CHECK(parsed.field == f2);
    CHECK(parsed.symbols == cw);
}
