#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "suicp/codec.hpp"
#include "suicp/problem.hpp"

namespace suicp {

/// A constructed code bundled with its decoding plan; the unit the CLI
/// serializes.
struct GeneratedCode {
    CodeSpec spec;
    DecodingPlan plan;
};

inline GeneratedCode generate_code(const ProblemParams& params, const PrimeField& field) {
    CodeSpec spec = build_code(params, field);
    DecodingPlan plan = decoding_plan(spec);
    return GeneratedCode{std::move(spec), std::move(plan)};
}

namespace detail {

constexpr const char* kCodeHeader = "suicp-code v1";

inline std::string join(const std::vector<std::uint32_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
    }
    return os.str();
}

class LineReader {
public:
    explicit LineReader(const std::string& text) : is_(text) {}

    std::string next() {
        std::string line;
        if (!std::getline(is_, line)) {
            throw std::invalid_argument("unexpected end of document");
        }
        ++lineno_;
        return line;
    }

    bool done() {
        return is_.peek() == std::char_traits<char>::eof();
    }

    [[nodiscard]] std::size_t lineno() const noexcept { return lineno_; }

private:
    std::istringstream is_;
    std::size_t lineno_ = 0;
};

inline std::uint32_t parse_u32(const std::string& token, const std::string& what) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(token, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad " + what + ": '" + token + "'");
    }
    if (pos != token.size() || v > 0xffffffffull) {
        throw std::invalid_argument("bad " + what + ": '" + token + "'");
    }
    return static_cast<std::uint32_t>(v);
}

inline std::string expect_key(LineReader& in, const std::string& key) {
    const std::string line = in.next();
    const std::string prefix = key + ": ";
    if (line.rfind(prefix, 0) != 0) {
        throw std::invalid_argument("expected '" + key + ":' on line " +
                                    std::to_string(in.lineno()));
    }
    return line.substr(prefix.size());
}

inline Rate parse_rate(const std::string& text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) {
        throw std::invalid_argument("bad rate: '" + text + "'");
    }
    return Rate(parse_u32(text.substr(0, slash), "rate numerator"),
                parse_u32(text.substr(slash + 1), "rate denominator"));
}

}  // namespace detail

/// Stable key/value document for a generated code. Parsing the output and
/// re-serializing reproduces it byte for byte.
inline std::string to_text(const GeneratedCode& code) {
    const CodeSpec& spec = code.spec;
    const ProblemParams& p = spec.params();
    const DerivedParams& d = spec.derived();
    std::ostringstream os;
    os << detail::kCodeHeader << '\n';
    os << "K: " << p.message_count() << '\n';
    os << "D: " << p.side_after() << '\n';
    os << "U: " << p.side_before() << '\n';
    os << "q: " << spec.field().modulus() << '\n';
    os << "group: " << d.group << '\n';
    os << "dimension: " << d.dimension << '\n';
    os << "window: " << d.window << '\n';
    os << "blocks: " << d.blocks << '\n';
    os << "length: " << d.length << '\n';
    os << "capacity: " << capacity(p).str() << '\n';
    os << "rate: " << achieved_rate(d).str() << '\n';
    os << "minimal-dimension-certified: " << (minimality_certified(p) ? "yes" : "no") << '\n';
    if (p.rate_one_boundary()) {
        os << "note: U+D = K-1 boundary; capacity 1 but this construction sends "
           << d.length << " symbols per " << d.dimension << "\n";
    }
    os << "air-matrix:\n" << to_text(spec.air());
    os << "encoding-matrix:\n" << to_text(spec.encoding());
    for (std::size_t s = 0; s < code.plan.size(); ++s) {
        const PlanEntry& e = code.plan.entry(s);
        os << "plan " << s << ": weights " << detail::join(e.weights) << " window";
        for (std::size_t t = 0; t < e.offsets.size(); ++t) {
            os << ' ' << e.offsets[t] << ':' << e.coeffs[t];
        }
        os << '\n';
    }
    return os.str();
}

inline GeneratedCode generated_code_from_text(const std::string& text) {
    detail::LineReader in(text);
    if (in.next() != detail::kCodeHeader) {
        throw std::invalid_argument("not a suicp-code document");
    }
    const std::uint32_t k = detail::parse_u32(detail::expect_key(in, "K"), "K");
    const std::uint32_t dd = detail::parse_u32(detail::expect_key(in, "D"), "D");
    const std::uint32_t u = detail::parse_u32(detail::expect_key(in, "U"), "U");
    const std::uint32_t q = detail::parse_u32(detail::expect_key(in, "q"), "q");
    const ProblemParams params(k, dd, u);
    const PrimeField field(q);
    const DerivedParams d = derive(params);

    if (detail::parse_u32(detail::expect_key(in, "group"), "group") != d.group ||
        detail::parse_u32(detail::expect_key(in, "dimension"), "dimension") != d.dimension ||
        detail::parse_u32(detail::expect_key(in, "window"), "window") != d.window ||
        detail::parse_u32(detail::expect_key(in, "blocks"), "blocks") != d.blocks ||
        detail::parse_u32(detail::expect_key(in, "length"), "length") != d.length) {
        throw std::invalid_argument("derived parameters do not match K, D, U");
    }
    if (detail::parse_rate(detail::expect_key(in, "capacity")) != capacity(params) ||
        detail::parse_rate(detail::expect_key(in, "rate")) != achieved_rate(d)) {
        throw std::invalid_argument("capacity/rate do not match parameters");
    }
    const std::string cert = detail::expect_key(in, "minimal-dimension-certified");
    if (cert != (minimality_certified(params) ? "yes" : "no")) {
        throw std::invalid_argument("minimality certificate does not match parameters");
    }
    if (params.rate_one_boundary()) {
        detail::expect_key(in, "note");
    }

    auto read_matrix = [&](const std::string& key, std::size_t rows) {
        if (in.next() != key + ":") {
            throw std::invalid_argument("expected '" + key + ":' section");
        }
        std::string block;
        for (std::size_t r = 0; r < rows; ++r) block += in.next() + "\n";
        return matrix_from_text(block, field);
    };
    FieldMatrix air = read_matrix("air-matrix", d.blocks);
    FieldMatrix encoding =
        read_matrix("encoding-matrix", std::size_t(params.message_count()) * d.dimension);
    CodeSpec spec = CodeSpec::from_parts(params, field, std::move(air), std::move(encoding));

    std::vector<PlanEntry> entries;
    entries.reserve(d.blocks);
    for (std::size_t s = 0; s < d.blocks; ++s) {
        const std::string line = in.next();
        std::istringstream ls(line);
        std::string word;
        auto bad = [&]() {
            return std::invalid_argument("malformed plan line: " + line);
        };
        if (!(ls >> word) || word != "plan") throw bad();
        if (!(ls >> word) || word != std::to_string(s) + ":") throw bad();
        if (!(ls >> word) || word != "weights") throw bad();
        PlanEntry entry;
        for (std::size_t j = 0; j < d.length; ++j) {
            if (!(ls >> word)) throw bad();
            const std::uint32_t w = detail::parse_u32(word, "plan weight");
            if (w >= q) throw bad();
            entry.weights.push_back(w);
        }
        if (!(ls >> word) || word != "window") throw bad();
        while (ls >> word) {
            const std::size_t colon = word.find(':');
            if (colon == std::string::npos) throw bad();
            const std::uint32_t off = detail::parse_u32(word.substr(0, colon), "plan offset");
            const std::uint32_t coef = detail::parse_u32(word.substr(colon + 1), "plan coeff");
            if (off == 0 || off > d.window || coef == 0 || coef >= q) throw bad();
            if (!entry.offsets.empty() && off <= entry.offsets.back()) throw bad();
            entry.offsets.push_back(off);
            entry.coeffs.push_back(coef);
        }
        entries.push_back(std::move(entry));
    }
    while (!in.done()) {
        if (!in.next().empty()) {
            throw std::invalid_argument("trailing content after plans");
        }
    }
    return GeneratedCode{std::move(spec), DecodingPlan(std::move(entries))};
}

/// JSON mirror of the text document (stable key order).
inline nlohmann::ordered_json to_json_value(const GeneratedCode& code) {
    const CodeSpec& spec = code.spec;
    const ProblemParams& p = spec.params();
    const DerivedParams& d = spec.derived();
    nlohmann::ordered_json j;
    j["format"] = "suicp-code";
    j["version"] = 1;
    j["K"] = p.message_count();
    j["D"] = p.side_after();
    j["U"] = p.side_before();
    j["q"] = spec.field().modulus();
    j["group"] = d.group;
    j["dimension"] = d.dimension;
    j["window"] = d.window;
    j["blocks"] = d.blocks;
    j["length"] = d.length;
    j["capacity"] = capacity(p).str();
    j["rate"] = achieved_rate(d).str();
    j["minimal_dimension_certified"] = minimality_certified(p);
    if (p.rate_one_boundary()) j["boundary"] = "U+D = K-1";
    auto matrix_rows = [](const FieldMatrix& m) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.raw(r, c));
            rows.push_back(std::move(row));
        }
        return rows;
    };
    j["air_matrix"] = matrix_rows(spec.air());
    j["encoding_matrix"] = matrix_rows(spec.encoding());
    nlohmann::ordered_json plans = nlohmann::ordered_json::array();
    for (const PlanEntry& e : code.plan.entries()) {
        nlohmann::ordered_json entry;
        entry["weights"] = e.weights;
        nlohmann::ordered_json window = nlohmann::ordered_json::array();
        for (std::size_t t = 0; t < e.offsets.size(); ++t) {
            window.push_back({{"offset", e.offsets[t]}, {"coeff", e.coeffs[t]}});
        }
        entry["window"] = std::move(window);
        plans.push_back(std::move(entry));
    }
    j["plans"] = std::move(plans);
    return j;
}

inline std::string to_json(const GeneratedCode& code) { return to_json_value(code).dump(2) + "\n"; }

inline GeneratedCode generated_code_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("format") != "suicp-code" || j.at("version") != 1) {
        throw std::invalid_argument("not a suicp-code JSON document");
    }
    const ProblemParams params(j.at("K").get<std::uint32_t>(), j.at("D").get<std::uint32_t>(),
                               j.at("U").get<std::uint32_t>());
    const PrimeField field(j.at("q").get<std::uint32_t>());
    const DerivedParams d = derive(params);
    auto matrix_of = [&](const nlohmann::json& rows, std::size_t nr, std::size_t nc) {
        if (rows.size() != nr) throw std::invalid_argument("matrix has wrong row count");
        FieldMatrix m(nr, nc, field);
        for (std::size_t r = 0; r < nr; ++r) {
            if (rows[r].size() != nc) throw std::invalid_argument("matrix has ragged rows");
            for (std::size_t c = 0; c < nc; ++c) {
                m.set_raw(r, c, rows[r][c].get<std::uint32_t>());
            }
        }
        return m;
    };
    CodeSpec spec = CodeSpec::from_parts(
        params, field, matrix_of(j.at("air_matrix"), d.blocks, d.length),
        matrix_of(j.at("encoding_matrix"), std::size_t(params.message_count()) * d.dimension,
                  d.length));
    std::vector<PlanEntry> entries;
    for (const auto& pe : j.at("plans")) {
        PlanEntry entry;
        entry.weights = pe.at("weights").get<std::vector<std::uint32_t>>();
        if (entry.weights.size() != d.length) {
            throw std::invalid_argument("plan weights have wrong length");
        }
        for (const auto& w : pe.at("window")) {
            entry.offsets.push_back(w.at("offset").get<std::uint32_t>());
            entry.coeffs.push_back(w.at("coeff").get<std::uint32_t>());
        }
        entries.push_back(std::move(entry));
    }
    if (entries.size() != d.blocks) throw std::invalid_argument("wrong number of plans");
    return GeneratedCode{std::move(spec), DecodingPlan(std::move(entries))};
}

/// Message file: header "q K D U", then K lines of `dimension` symbols.
inline std::string to_text(const MessageBlock& block) {
    std::ostringstream os;
    const ProblemParams& p = block.params();
    os << block.field().modulus() << ' ' << p.message_count() << ' ' << p.side_after() << ' '
       << p.side_before() << '\n';
    for (std::size_t k = 0; k < p.message_count(); ++k) {
        for (std::size_t c = 0; c < block.dimension(); ++c) {
            if (c) os << ' ';
            os << block.raw(k, c);
        }
        os << '\n';
    }
    return os.str();
}

namespace detail {

struct FileHeader {
    ProblemParams params;
    PrimeField field;
};

inline FileHeader parse_header(LineReader& in) {
    std::istringstream hs(in.next());
    std::uint32_t q = 0, k = 0, dd = 0, u = 0;
    if (!(hs >> q >> k >> dd >> u) || !(hs >> std::ws).eof()) {
        throw std::invalid_argument("malformed header; expected 'q K D U'");
    }
    return FileHeader{ProblemParams(k, dd, u), PrimeField(q)};
}

}  // namespace detail

inline MessageBlock message_block_from_text(const std::string& text) {
    detail::LineReader in(text);
    const detail::FileHeader h = detail::parse_header(in);
    const DerivedParams d = derive(h.params);
    MessageBlock block(h.params, h.field);
    for (std::size_t k = 0; k < h.params.message_count(); ++k) {
        std::istringstream ls(in.next());
        for (std::size_t c = 0; c < d.dimension; ++c) {
            std::uint64_t v = 0;
            if (!(ls >> v) || v >= h.field.modulus()) {
                throw std::invalid_argument("bad symbol in message line " + std::to_string(k));
            }
            block.set_raw(k, c, static_cast<std::uint32_t>(v));
        }
        if (!(ls >> std::ws).eof()) {
            throw std::invalid_argument("excess symbols in message line " + std::to_string(k));
        }
    }
    return block;
}

/// Codeword file: same "q K D U" header, then the broadcast symbols on one
/// line.
inline std::string codeword_to_text(const ProblemParams& params, const PrimeField& field,
                                    const std::vector<FieldElement>& codeword) {
    std::ostringstream os;
    os << field.modulus() << ' ' << params.message_count() << ' ' << params.side_after() << ' '
       << params.side_before() << '\n';
    for (std::size_t j = 0; j < codeword.size(); ++j) {
        if (j) os << ' ';
        os << codeword[j].value();
    }
    os << '\n';
    return os.str();
}

struct CodewordFile {
    ProblemParams params;
    PrimeField field;
    std::vector<FieldElement> symbols;
};

inline CodewordFile codeword_from_text(const std::string& text) {
    detail::LineReader in(text);
    const detail::FileHeader h = detail::parse_header(in);
    std::istringstream ls(in.next());
    std::vector<FieldElement> symbols;
    std::uint64_t v = 0;
    while (ls >> v) {
        if (v >= h.field.modulus()) {
            throw std::invalid_argument("codeword symbol out of range");
        }
        symbols.emplace_back(static_cast<std::uint32_t>(v), h.field);
    }
    if (!ls.eof()) throw std::invalid_argument("malformed codeword line");
    return CodewordFile{h.params, h.field, std::move(symbols)};
}

}  // namespace suicp
