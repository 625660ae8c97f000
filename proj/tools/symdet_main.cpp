#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "symdet/json_io.hpp"

namespace {

using symdet::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

std::string read_input(const std::string& input) {
    if (input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    return input;
}

void emit(const json& j, const std::string& output_path) {
    if (output_path.empty() || output_path == "-") {
        std::cout << j.dump() << "\n";
        return;
    }
    std::ofstream out(output_path);
    if (!out) {
        throw symdet::Error(symdet::ErrorCode::InvalidArgument,
                            "cannot open output file '" + output_path + "'");
    }
    out << j.dump() << "\n";
}

struct VerifySpec {
    std::string mode = "none";
    std::uint64_t count = 50;
};

VerifySpec parse_verify_mode(const std::string& text) {
    VerifySpec spec;
    if (text == "none" || text == "symbolic" || text == "exhaustive") {
        spec.mode = text;
        return spec;
    }
    if (text == "sampled") {
        spec.mode = "sampled";
        return spec;
    }
    if (text.rfind("sampled:", 0) == 0) {
        spec.mode = "sampled";
        spec.count = std::stoull(text.substr(8));
        return spec;
    }
    throw symdet::Error(symdet::ErrorCode::InvalidArgument,
                        "bad verify mode '" + text +
                            "' (expected none|symbolic|sampled[:<n>]|exhaustive)");
}

symdet::VerifyReport run_verify(const symdet::SymmetricPencil& pencil,
                                const symdet::Polynomial& poly, const VerifySpec& spec,
                                std::uint64_t seed, std::size_t symbolic_limit) {
    if (spec.mode == "symbolic") return symdet::verify_symbolic(pencil, poly, symbolic_limit);
    if (spec.mode == "sampled") return symdet::verify_sampled(pencil, poly, spec.count, seed);
    return symdet::verify_exhaustive(pencil, poly);
}

std::string render_matrix_pretty(const symdet::Matrix& m) {
    std::vector<std::vector<std::string>> cells(m.rows());
    std::vector<std::size_t> widths(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cells[i].push_back(m(i, j).str());
            widths[j] = std::max(widths[j], cells[i][j].size());
        }
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out << std::string(widths[j] - cells[i][j].size(), ' ') << cells[i][j];
            if (j + 1 < m.cols()) out << "  ";
        }
        out << "]\n";
    }
    return out.str();
}

void print_pencil_pretty(const symdet::SymmetricPencil& pencil) {
    std::cout << "pencil of size " << pencil.size << " over " << pencil.desc.spec() << "\n";
    std::cout << "A0 =\n" << render_matrix_pretty(pencil.a0);
    for (std::size_t i = 0; i < pencil.registry.size(); ++i) {
        std::cout << "coefficient of " << pencil.registry.name(i) << " =\n"
                  << render_matrix_pretty(pencil.coeff[i]);
    }
}

symdet::SymmetricPencil load_pencil(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            throw symdet::Error(symdet::ErrorCode::InvalidArgument,
                                "cannot open pencil file '" + path + "'");
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    json j = json::parse(text);
    // Accept a bare pencil, a build report, or the composite CLI output.
    if (j.contains("build")) j = j["build"];
    if (j.contains("pencil")) j = j["pencil"];
    return symdet::pencil_from_json(j);
}

json example_bundle(const std::string& name) {
    if (name != "hmv-sec4") {
        throw symdet::Error(symdet::ErrorCode::UnknownExample, "unknown example '" + name + "'");
    }
    const auto desc = symdet::FieldDescriptor::rationals();
    const auto poly = symdet::parse_polynomial("z1 + z2*z3", desc);
    const auto report = symdet::build(poly, symdet::Strategy::Auto);
    const auto verdict = symdet::verify_symbolic(report.pencil, poly);
    return json{{"name", name},
                {"input", "z1 + z2*z3"},
                {"field", symdet::field_to_json(desc)},
                {"build", symdet::build_report_to_json(report)},
                {"verify", symdet::verify_report_to_json(verdict)}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symdet: symmetric determinantal representations of multivariate polynomials"};
    app.require_subcommand(1);

    std::string field_spec = "q";
    std::string strategy_name = "auto";
    std::string verify_mode = "none";
    std::string input;
    std::string output;
    std::string pencil_path;
    std::string example_name;
    std::uint64_t seed = 12345;
    std::size_t symbolic_limit = 10;
    bool pretty = false;

    auto* cmd_build = app.add_subcommand("build", "compile a polynomial into a symmetric pencil");
    cmd_build->add_option("input", input, "polynomial text (\"-\" reads stdin)")->required();
    cmd_build->add_option("--field", field_spec, "coefficient field: q or fp:<prime>");
    cmd_build->add_option("--strategy", strategy_name, "auto | shift | rankfactor");
    cmd_build->add_option("--verify", verify_mode, "none | symbolic | sampled[:<n>] | exhaustive");
    cmd_build->add_option("--seed", seed, "RNG seed for sampled verification");
    cmd_build->add_option("--symbolic-limit", symbolic_limit, "max pencil size for symbolic mode");
    cmd_build->add_option("--output,-o", output, "output path (default stdout)");
    cmd_build->add_flag("--pretty", pretty, "human-readable matrices instead of JSON");

    auto* cmd_verify = app.add_subcommand("verify", "check det(pencil) == polynomial");
    cmd_verify->add_option("input", input, "polynomial text (\"-\" reads stdin)")->required();
    cmd_verify->add_option("--pencil", pencil_path, "pencil JSON file (\"-\" reads stdin)")
        ->required();
    cmd_verify->add_option("--mode", verify_mode, "symbolic | sampled[:<n>] | exhaustive")
        ->default_val("symbolic");
    cmd_verify->add_option("--seed", seed, "RNG seed for sampled verification");
    cmd_verify->add_option("--symbolic-limit", symbolic_limit, "max pencil size for symbolic mode");
    cmd_verify->add_option("--output,-o", output, "output path (default stdout)");

    auto* cmd_decompose =
        app.add_subcommand("decompose", "write a polynomial as an affine seed plus substitutions");
    cmd_decompose->add_option("input", input, "polynomial text (\"-\" reads stdin)")->required();
    cmd_decompose->add_option("--field", field_spec, "coefficient field: q or fp:<prime>");
    cmd_decompose->add_option("--output,-o", output, "output path (default stdout)");

    auto* cmd_example = app.add_subcommand("example", "emit a bundled worked example");
    cmd_example->add_option("name", example_name, "example name (hmv-sec4)")->required();
    cmd_example->add_option("--output,-o", output, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return kExitUsage;
    }

    try {
        if (cmd_build->parsed()) {
            const auto desc = symdet::FieldDescriptor::from_spec(field_spec);
            const auto poly = symdet::parse_polynomial(read_input(input), desc);
            const auto strategy = symdet::strategy_from_name(strategy_name);
            const auto report = symdet::build(poly, strategy);

            const VerifySpec vspec = parse_verify_mode(verify_mode);
            json out{{"build", symdet::build_report_to_json(report)}};
            bool verify_failed = false;
            if (vspec.mode != "none") {
                const auto verdict = run_verify(report.pencil, poly, vspec, seed, symbolic_limit);
                out["verify"] = symdet::verify_report_to_json(verdict);
                verify_failed = !verdict.passed;
            }
            if (pretty) {
                print_pencil_pretty(report.pencil);
            } else {
                emit(out, output);
            }
            return verify_failed ? kExitVerifyFailed : kExitOk;
        }
        if (cmd_verify->parsed()) {
            const auto pencil = load_pencil(pencil_path);
            const auto poly = symdet::parse_polynomial(read_input(input), pencil.desc);
            const VerifySpec vspec = parse_verify_mode(verify_mode);
            if (vspec.mode == "none") {
                throw symdet::Error(symdet::ErrorCode::InvalidArgument,
                                    "verify needs a mode other than none");
            }
            const auto verdict = run_verify(pencil, poly, vspec, seed, symbolic_limit);
            emit(symdet::verify_report_to_json(verdict), output);
            return verdict.passed ? kExitOk : kExitVerifyFailed;
        }
        if (cmd_decompose->parsed()) {
            const auto desc = symdet::FieldDescriptor::from_spec(field_spec);
            const auto poly = symdet::parse_polynomial(read_input(input), desc);
            emit(symdet::script_to_json(symdet::decompose(poly)), output);
            return kExitOk;
        }
        if (cmd_example->parsed()) {
            emit(example_bundle(example_name), output);
            return kExitOk;
        }
    } catch (const symdet::Error& e) {
        std::cout << json{{"error", e.what()}, {"code", symdet::error_code_name(e.code())}}.dump()
                  << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cout << json{{"error", e.what()}}.dump() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
