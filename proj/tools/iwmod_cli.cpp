#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "iwmod/errors.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

const char* const kDescriptions[][2] = {
    {"adapted-basis", "adapted generators of a finite abelian p-group for a subgroup with cyclic quotient"},
    {"kerim-check", "compare #ker/#im orders for an endomorphism and a stable subgroup"},
    {"coinv", "S-coinvariant order of an elementary Lambda-module"},
    {"char", "characteristic series of a square Lambda-presentation"},
    {"twovar-char", "two-variable characteristic determinant and its specializations"},
    {"classify-nonsplit", "dimension of coinvariants modulo (p, S, T) in the non-split case"},
    {"classify-lambda2", "cyclicity verdict for lambda = 2 from a profile or an explicit embedding"},
    {"cross-validate", "compare the lambda = 2 rules with the linear oracle over a range of instances"},
};

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const iwmod::ParseError*>(&e)) return 4;
    if (dynamic_cast<const iwmod::PreconditionError*>(&e)) return 2;
    if (dynamic_cast<const iwmod::PrecisionError*>(&e)) return 3;
    if (dynamic_cast<const std::invalid_argument*>(&e)) return 4;
    return 1;
}

std::string error_kind(int code) {
    switch (code) {
        case 2: return "precondition";
        case 3: return "precision";
        case 4: return "input";
        default: return "internal";
    }
}

iwmod::cli::Document read_input(const std::string& path) {
    if (path != "-") return iwmod::cli::load_document(path);
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return iwmod::cli::parse_document(text);
}

}  // namespace

int main(int argc, char** argv) {
    using iwmod::cli::json;
    CLI::App app{"Iwasawa module computations"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string input, format = "text", out_path;
    std::optional<int> precision;
    std::uint64_t seed = 1;
    if (const char* env = std::getenv("IWMOD_PRECISION")) {
        try {
            precision = std::stoi(env);
        } catch (const std::exception&) {
            std::cerr << "error: IWMOD_PRECISION must be an integer\n";
            return 4;
        }
    }
    for (const auto& d : kDescriptions) {
        CLI::App* sub = app.add_subcommand(d[0], d[1]);
        sub->add_option("input", input, "description file (text or JSON, '-' for stdin)")->required();
        sub->add_option("--precision", precision, "working p-adic precision");
        sub->add_option("--seed", seed, "random seed");
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--out", out_path, "write output to this file");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 4;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    std::ostringstream out;
    int code = 0;
    try {
        if (precision && *precision < 1) throw std::invalid_argument("precision must be positive");
        iwmod::cli::Options opt{precision, seed};
        auto report = iwmod::cli::run_command(command, read_input(input), opt);
        if (format == "json") {
            json doc{{"provenance",
                      {{"tool", "iwmod"},
                       {"version", kVersion},
                       {"command", command},
                       {"ring", report.ring},
                       {"precision", report.precision},
                       {"seed", seed}}},
                     {"result", report.result}};
            out << doc.dump(2) << "\n";
        } else {
            for (const auto& line : report.text) out << line << "\n";
        }
    } catch (const std::exception& e) {
        code = exit_code_for(e);
        if (format == "json") {
            json doc{{"provenance", {{"tool", "iwmod"}, {"version", kVersion}, {"command", command}}},
                     {"error", {{"kind", error_kind(code)}, {"exit_code", code}, {"message", e.what()}}}};
            out << doc.dump(2) << "\n";
        }
        std::cerr << "error (" << error_kind(code) << "): " << e.what() << "\n";
    }
    if (out_path.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return 4;
        }
        f << out.str();
    }
    return code;
}
