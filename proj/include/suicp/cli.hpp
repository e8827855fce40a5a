#pragma once

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "suicp/reference.hpp"
#include "suicp/serialization.hpp"
#include "suicp/simulation.hpp"

namespace suicp::cli {

namespace detail {

inline std::string slurp(std::istream& stdin_stream, const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << stdin_stream.rdbuf();
        return os.str();
    }
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

inline void spill(std::ostream& stdout_stream, const std::string& path,
                  const std::string& content) {
    if (path.empty() || path == "-") {
        stdout_stream << content;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << content;
}

inline std::vector<PrimeField> parse_fields(const std::string& csv) {
    std::vector<PrimeField> fields;
    std::istringstream is(csv);
    std::string token;
    while (std::getline(is, token, ',')) {
        if (token.empty()) continue;
        fields.emplace_back(static_cast<std::uint32_t>(std::stoul(token)));
    }
    if (fields.empty()) throw std::runtime_error("no fields given");
    return fields;
}

}  // namespace detail

/// Command dispatcher behind the `suicp` binary. Streams are injected so
/// tests can drive commands in-process. Exit codes: 0 success, 1 usage or
/// input error, 2 verification failure.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"Capacity-achieving vector linear index codes for the single unicast\n"
                 "index coding problem with symmetric neighboring consecutive\n"
                 "side-information."};
    app.require_subcommand(1);
    std::function<int()> action;

    std::uint32_t k = 0, d = 0, u = 0, q = 2;
    std::size_t rows = 0, cols = 0;
    std::uint64_t trials = 100, seed = 0;
    std::string fields_csv = "2,3,5";
    std::string format = "text";
    std::string input, output, messages_path, codeword_path;
    std::int64_t receiver = -1;
    bool verify = false, check = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_params = [&](CLI::App* cmd, bool with_q) {
        cmd->add_option("--k", k, "number of messages K")->required();
        cmd->add_option("--d", d, "side-information messages after the wanted one (D)")
            ->required();
        cmd->add_option("--u", u, "side-information messages before the wanted one (U)")
            ->required();
        if (with_q) cmd->add_option("--q", q, "prime field modulus (default 2)");
    };

    CLI::App* cap = app.add_subcommand("capacity", "capacity and derived code parameters");
    add_params(cap, false);
    add_format(cap);
    cap->callback([&] {
        action = [&]() -> int {
            const ProblemParams params(k, d, u);
            const DerivedParams dv = derive(params);
            if (format == "json") {
                nlohmann::ordered_json j;
                j["K"] = params.message_count();
                j["D"] = params.side_after();
                j["U"] = params.side_before();
                j["capacity"] = capacity(params).str();
                j["group"] = dv.group;
                j["dimension"] = dv.dimension;
                j["window"] = dv.window;
                j["blocks"] = dv.blocks;
                j["length"] = dv.length;
                j["rate"] = achieved_rate(dv).str();
                j["minimal_dimension_certified"] = minimality_certified(params);
                if (params.rate_one_boundary()) j["boundary"] = "U+D = K-1";
                out << j.dump(2) << '\n';
                return 0;
            }
            out << "K: " << params.message_count() << '\n';
            out << "D: " << params.side_after() << '\n';
            out << "U: " << params.side_before() << '\n';
            out << "capacity: " << capacity(params).str() << '\n';
            out << "group: " << dv.group << '\n';
            out << "dimension: " << dv.dimension << '\n';
            out << "window: " << dv.window << '\n';
            out << "blocks: " << dv.blocks << '\n';
            out << "length: " << dv.length << '\n';
            out << "rate: " << achieved_rate(dv).str() << '\n';
            out << "minimal-dimension-certified: "
                << (minimality_certified(params) ? "yes" : "no") << '\n';
            if (params.rate_one_boundary()) {
                out << "note: U+D = K-1 boundary; capacity 1 but this construction sends "
                    << dv.length << " symbols per " << dv.dimension << "\n";
            }
            return 0;
        };
    });

    CLI::App* air_cmd = app.add_subcommand("air", "print an adjacent-independent-row matrix");
    air_cmd->add_option("--rows", rows, "matrix rows m")->required();
    air_cmd->add_option("--cols", cols, "matrix columns n")->required();
    air_cmd->add_flag("--verify", verify, "check adjacent independence over --fields");
    air_cmd->add_option("--fields", fields_csv, "comma-separated prime moduli (default 2,3,5)");
    add_format(air_cmd);
    air_cmd->callback([&] {
        action = [&]() -> int {
            const FieldMatrix m = air_matrix(rows, cols);
            bool ok = true;
            std::vector<PrimeField> fields;
            if (verify) {
                fields = detail::parse_fields(fields_csv);
                ok = all_windows_independent(m, std::span<const PrimeField>(fields));
            }
            if (format == "json") {
                nlohmann::ordered_json j;
                j["rows"] = rows;
                j["cols"] = cols;
                nlohmann::ordered_json mat = nlohmann::ordered_json::array();
                for (std::size_t r = 0; r < m.rows(); ++r) {
                    nlohmann::ordered_json row = nlohmann::ordered_json::array();
                    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.raw(r, c));
                    mat.push_back(std::move(row));
                }
                j["matrix"] = std::move(mat);
                if (verify) {
                    nlohmann::ordered_json fs = nlohmann::ordered_json::array();
                    for (const auto& f : fields) fs.push_back(f.modulus());
                    j["fields"] = std::move(fs);
                    j["adjacent_independent"] = ok;
                }
                out << j.dump(2) << '\n';
            } else {
                out << to_text(m);
                if (verify) {
                    out << "air-property: " << (ok ? "ok" : "FAILED") << " fields";
                    for (const auto& f : fields) out << ' ' << f.modulus();
                    out << '\n';
                }
            }
            return ok ? 0 : 2;
        };
    });

    CLI::App* gen = app.add_subcommand("generate", "construct a code and its decoding plan");
    add_params(gen, true);
    gen->add_option("--output", output, "write the document here instead of stdout");
    add_format(gen);
    gen->callback([&] {
        action = [&]() -> int {
            const GeneratedCode code = generate_code(ProblemParams(k, d, u), PrimeField(q));
            detail::spill(out, output, format == "json" ? to_json(code) : to_text(code));
            if (code.spec.params().rate_one_boundary()) {
                err << "warning: U+D = K-1, capacity 1; this construction is rate "
                    << achieved_rate(code.spec.derived()).str() << '\n';
            }
            return 0;
        };
    });

    CLI::App* enc = app.add_subcommand("encode", "encode a message file into broadcast symbols");
    enc->add_option("--input", input, "message file (default stdin)");
    enc->add_option("--output", output, "codeword file (default stdout)");
    enc->callback([&] {
        action = [&]() -> int {
            const MessageBlock block = message_block_from_text(detail::slurp(in, input));
            const CodeSpec spec(block.params(), block.field());
            const std::vector<FieldElement> cw = encode(block, spec);
            detail::spill(out, output, codeword_to_text(block.params(), block.field(), cw));
            return 0;
        };
    });

    CLI::App* dec = app.add_subcommand(
        "decode", "decode broadcast symbols at each receiver from its side-information");
    dec->add_option("--messages", messages_path, "message file supplying side-information")
        ->required();
    dec->add_option("--codeword", codeword_path, "codeword file")->required();
    dec->add_option("--receiver", receiver, "decode only this receiver (default: all)");
    dec->add_flag("--check", check, "compare decoded output against the message file");
    add_format(dec);
    dec->callback([&] {
        action = [&]() -> int {
            const MessageBlock block = message_block_from_text(detail::slurp(in, messages_path));
            const CodewordFile cf = codeword_from_text(detail::slurp(in, codeword_path));
            if (cf.params != block.params() || cf.field != block.field()) {
                throw std::runtime_error("message and codeword headers disagree");
            }
            const CodeSpec spec(block.params(), block.field());
            const DecodingPlan plan = decoding_plan(spec);
            std::vector<std::size_t> targets;
            if (receiver >= 0) {
                targets.push_back(static_cast<std::size_t>(receiver));
            } else {
                for (std::size_t r = 0; r < block.params().message_count(); ++r) {
                    targets.push_back(r);
                }
            }
            bool all_match = true;
            nlohmann::ordered_json jout = nlohmann::ordered_json::array();
            for (std::size_t target : targets) {
                SideInformation known;
                for (std::size_t m : side_info(block.params(), target)) {
                    known.emplace(m, block.message(m));
                }
                const auto decoded = receiver_decode(target, cf.symbols, known, spec, plan);
                if (check && decoded != block.message(target)) all_match = false;
                if (format == "json") {
                    nlohmann::ordered_json entry;
                    entry["receiver"] = target;
                    std::vector<std::uint32_t> vals;
                    for (const auto& e : decoded) vals.push_back(e.value());
                    entry["message"] = vals;
                    jout.push_back(std::move(entry));
                } else {
                    out << "receiver " << target << ':';
                    for (const auto& e : decoded) out << ' ' << e.value();
                    out << '\n';
                }
            }
            if (format == "json") out << jout.dump(2) << '\n';
            if (check) {
                if (format != "json") {
                    out << "check: " << (all_match ? "ok" : "FAILED") << '\n';
                }
                return all_match ? 0 : 2;
            }
            return 0;
        };
    });

    CLI::App* sim = app.add_subcommand("simulate", "randomized end-to-end broadcast rounds");
    add_params(sim, true);
    sim->add_option("--trials", trials, "number of rounds (default 100)");
    sim->add_option("--seed", seed, "SplitMix64 seed (default 0)");
    add_format(sim);
    sim->callback([&] {
        action = [&]() -> int {
            const SimulationReport report =
                simulate(ProblemParams(k, d, u), PrimeField(q), trials, seed);
            out << (format == "json" ? to_json(report) : to_text(report));
            return 0;
        };
    });

    CLI::App* ver = app.add_subcommand("verify-examples",
                                       "re-derive the built-in known-answer corpus");
    add_format(ver);
    ver->callback([&] {
        action = [&]() -> int {
            const auto results = reference::run_all(reference::default_corpus());
            std::size_t passed = 0;
            for (const auto& r : results) {
                if (r.passed) ++passed;
            }
            if (format == "json") {
                nlohmann::ordered_json j;
                nlohmann::ordered_json cases = nlohmann::ordered_json::array();
                for (const auto& r : results) {
                    cases.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
                }
                j["cases"] = std::move(cases);
                j["passed"] = passed;
                j["total"] = results.size();
                out << j.dump(2) << '\n';
            } else {
                for (const auto& r : results) {
                    if (r.passed) {
                        out << "ok " << r.name << '\n';
                    } else {
                        out << "FAIL " << r.name << ": " << r.detail << '\n';
                    }
                }
                out << "summary: " << passed << '/' << results.size() << " passed\n";
            }
            return passed == results.size() ? 0 : 2;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }
    try {
        return action();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace suicp::cli
