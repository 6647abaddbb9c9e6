#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "quartic/commands.hpp"
#include "quartic/serialize.hpp"

using namespace quartic;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& s) {
    if (s == "text") {
        return Format::Text;
    }
    if (s == "json") {
        return Format::Json;
    }
    if (s == "csv") {
        return Format::Csv;
    }
    throw Error(Errc::ParseError, "unknown format '" + s + "'");
}

int parse_branch(const std::string& s) {
    if (s == "+" || s == "+1" || s == "1") {
        return 1;
    }
    if (s == "-" || s == "-1") {
        return -1;
    }
    throw Error(Errc::ParseError, "branch must be + or -");
}

CurvePoint parse_seed(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) {
        throw Error(Errc::ParseError, "seed must be X,Y");
    }
    return CurvePoint::affine(Rational::parse(s.substr(0, comma)), Rational::parse(s.substr(comma + 1)));
}

std::pair<long, long> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
        throw Error(Errc::ParseError, "range must be a..b");
    }
    try {
        std::size_t used = 0;
        const std::string lo = s.substr(0, dots);
        const std::string hi = s.substr(dots + 2);
        const long a = std::stol(lo, &used);
        if (used != lo.size()) {
            throw std::invalid_argument(lo);
        }
        const long b = std::stol(hi, &used);
        if (used != hi.size()) {
            throw std::invalid_argument(hi);
        }
        return {a, b};
    } catch (const std::logic_error&) {
        throw Error(Errc::ParseError, "bad range '" + s + "'");
    }
}

Json read_json(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) {
            throw Error(Errc::InvalidArgument, "cannot open " + path);
        }
        buf << in.rdbuf();
    }
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw Error(Errc::ParseError, path + ": " + e.what());
    }
}

void emit(std::span<const GeneratedSolution> sols, Format format) {
    if (format == Format::Csv) {
        write_csv(std::cout, sols);
    } else {
        std::cout << solutions_to_json(sols).dump(2) << '\n';
    }
}

int usage_class(Errc code) {
    switch (code) {
        case Errc::InvalidArgument:
        case Errc::ParseError:
        case Errc::UnknownConfig:
        case Errc::InputOffCurve:
        case Errc::SingularCurve:
            return kExitUsage;
        default:
            return kExitVerify;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solutions of a^4+b^4+c^4+d^4+e^4+k f^4 = g^4 and a^4+b^4+c^4+k d^4 = e^4"};
    app.require_subcommand(1);

    std::string format_text = "text";
    std::size_t count = 1;
    std::size_t max_digits = kDefaultMaxDigits;
    std::string branch_text = "+";
    std::string seed_text;
    std::string registry_path;
    std::string variant_text;
    int k = 0;

    auto* tables = app.add_subcommand("tables", "verify the 18 embedded table rows");

    auto* solve = app.add_subcommand("solve", "generate solutions from multiples of a seed point");
    solve->add_option("variant", variant_text, "five_plus | three_plus")->required();
    solve->add_option("k", k, "coefficient k")->required();
    solve->add_option("--count", count, "number of solutions")->check(CLI::PositiveNumber);
    solve->add_option("--max-digits", max_digits, "stop once g exceeds this many digits")
        ->check(CLI::PositiveNumber);
    solve->add_option("--branch", branch_text, "sign of the cubic model (+ or -)");
    solve->add_option("--seed", seed_text, "starting point X,Y on the curve");
    solve->add_option("--registry", registry_path, "JSON registry to use instead of the built-in one");
    std::string solve_format = "json";
    solve->add_option("--format", solve_format, "json | csv");

    std::string check_what;
    auto* check = app.add_subcommand("check", "run a property suite");
    check->add_option("what", check_what, "identities | families | curves")->required();

    int bound = 20;
    std::string content_text;
    auto* search = app.add_subcommand("search", "search multiplier tuples");
    search->add_option("variant", variant_text, "five_plus | three_plus")->required();
    search->add_option("k", k, "coefficient k")->required();
    search->add_option("--bound", bound, "largest multiplier")->check(CLI::PositiveNumber);
    search->add_option("--content", content_text, "square class to match (default: from the registry)");

    std::string verify_path;
    auto* verify_cmd = app.add_subcommand("verify", "re-verify solutions from a JSON file");
    verify_cmd->add_option("file", verify_path, "JSON file, or - for stdin")->required();

    int family_k = 0;
    std::string range_text = "-10..10";
    bool literal = false;
    auto* families = app.add_subcommand("families", "evaluate a parametric family");
    families->add_option("--eval", family_k, "k = 2 or 5")->required();
    families->add_option("--n-range", range_text, "a..b");
    families->add_flag("--literal", literal, "use the k=2 coefficients exactly as printed");
    families->add_option("--format", format_text, "text | json | csv");

    auto* reg = app.add_subcommand("registry", "export the built-in configurations as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const auto started = std::chrono::steady_clock::now();
    RunReport report;
    try {
        if (*tables) {
            report = cmd_tables();
            report.print(std::cout);
        } else if (*solve) {
            SolveOptions opts;
            opts.variant = parse_variant(variant_text);
            opts.k = k;
            opts.count = count;
            opts.max_digits = max_digits;
            opts.branch = parse_branch(branch_text);
            if (!seed_text.empty()) {
                opts.seed = parse_seed(seed_text);
            }
            if (!registry_path.empty()) {
                opts.configs = registry_from_json(read_json(registry_path));
            }
            const Format format = parse_format(solve_format);
            if (format == Format::Text) {
                throw Error(Errc::InvalidArgument, "solve emits json or csv");
            }
            auto result = cmd_solve(opts);
            emit(result.solutions, format);
            report = std::move(result.report);
            report.print(std::cerr);
        } else if (*check) {
            report = cmd_check(parse_check_category(check_what));
            report.print(std::cout);
        } else if (*search) {
            std::optional<Rational> content;
            if (!content_text.empty()) {
                content = Rational::parse(content_text);
            }
            auto result = cmd_search(parse_variant(variant_text), k, bound, content);
            report = std::move(result.report);
            report.print(std::cout);
        } else if (*verify_cmd) {
            const auto sols = solutions_from_json(read_json(verify_path));
            report = cmd_verify(sols);
            report.print(std::cout);
        } else if (*families) {
            const auto [from, to] = parse_range(range_text);
            const Format format = parse_format(format_text);
            auto result = cmd_families(family_k, from, to, literal);
            report = std::move(result.report);
            if (format == Format::Text) {
                report.print(std::cout);
            } else {
                emit(result.solutions, format);
                report.print(std::cerr);
            }
        } else if (*reg) {
            std::cout << registry_to_json(registry()).dump(2) << '\n';
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage_class(e.code());
    }

    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
    std::cerr << report.command << ": " << elapsed.count() << " s\n";
    return report.exit_code();
}
