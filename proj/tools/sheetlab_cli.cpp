/**
 * @file sheetlab_cli.cpp
 * @brief Command-line front end: JSON in, JSON out.
 *
 * Exit codes: 0 success, 1 verification failure, 2 malformed input or usage,
 * 3 resource guard, 4 non-square matrix, 5 nonzero trace in sl.
 */

#include "sheetlab/centralizer.hpp"
#include "sheetlab/errors.hpp"
#include "sheetlab/json_io.hpp"
#include "sheetlab/minor_gcd.hpp"
#include "sheetlab/orbit_closure.hpp"
#include "sheetlab/quotient.hpp"
#include "sheetlab/sheets.hpp"
#include "sheetlab/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace {

using namespace sheetlab;
using nlohmann::json;

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kInputError = 2,
    kGuard = 3,
    kShape = 4,
    kTrace = 5,
};

constexpr int kSheetsLimit = 40;

struct Common {
    std::string input = "-";
    std::string ambient = "sl";
    bool compact = false;
    bool pretty = false;
};

std::string read_source(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open input file \"" + path + "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json read_document(const std::string& path) { return io::parse_document(read_source(path)); }

void emit(const json& out, const Common& c) {
    std::cout << (c.pretty ? out.dump(2) : out.dump()) << '\n';
}

void add_common(CLI::App* cmd, Common& c, bool with_input = true) {
    if (with_input) {
        cmd->add_option("-i,--input", c.input, "JSON input file, or - for stdin")->capture_default_str();
    }
    cmd->add_option("--ambient", c.ambient, "Default ambient for matrices without one")
        ->check(CLI::IsMember({"sl", "gl"}))
        ->capture_default_str();
    auto* as_json = cmd->add_flag("--json", c.compact, "Compact single-line JSON (default)");
    auto* pretty = cmd->add_flag("--pretty", c.pretty, "Indented JSON");
    as_json->excludes(pretty);
}

RationalMatrix matrix_input(const Common& c) { return io::decode_matrix(read_document(c.input), parse_ambient(c.ambient)); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sheetlab: sheets, quotients and orbit closures in sl(n)"};
    app.require_subcommand(1);

    Common common;
    std::function<int()> action;

    auto* factors = app.add_subcommand("factors", "Q/q invariant-factor tower of x");
    add_common(factors, common);
    factors->callback([&] {
        action = [&] {
            const auto x = matrix_input(common);
            json out = io::encode(gcd_minor_profile(x));
            out["n"] = x.size();
            out["ambient"] = to_string(x.ambient());
            emit(out, common);
            return kOk;
        };
    });

    auto* classify = app.add_subcommand("classify", "Sheet partition and dimensions of x");
    add_common(classify, common);
    classify->callback([&] {
        action = [&] {
            emit(io::encode(classify_sheet(matrix_input(common))), common);
            return kOk;
        };
    });

    auto* quotient = app.add_subcommand("quotient", "Quotient point of x, with chart coordinates");
    add_common(quotient, common);
    quotient->callback([&] {
        action = [&] {
            const QuotientPoint z = quotient_point(matrix_input(common));
            json out = io::encode(z);
            json chart = json::array();
            for (const auto& v : z.chart()) {
                chart.push_back(io::encode(v));
            }
            out["chart"] = std::move(chart);
            emit(out, common);
            return kOk;
        };
    });

    auto* section_cmd = app.add_subcommand("section", "Block-companion representative of a quotient point");
    add_common(section_cmd, common);
    section_cmd->callback([&] {
        action = [&] {
            emit(io::encode(section(io::decode_quotient_point(read_document(common.input)))), common);
            return kOk;
        };
    });

    std::string other;
    auto* contains = app.add_subcommand("contains", "Whether y lies in the closure of the orbit of x");
    add_common(contains, common);
    contains->add_option("--other", other, "Matrix y; without it the input holds {\"x\": ..., \"y\": ...}");
    contains->callback([&] {
        action = [&] {
            const auto amb = parse_ambient(common.ambient);
            const json doc = read_document(common.input);
            RationalMatrix x(1, amb);
            RationalMatrix y(1, amb);
            if (other.empty()) {
                if (!doc.is_object() || !doc.contains("x") || !doc.contains("y")) {
                    throw ParseError("contains expects {\"x\": matrix, \"y\": matrix} or --other");
                }
                x = io::decode_matrix(doc.at("x"), amb);
                y = io::decode_matrix(doc.at("y"), amb);
            } else {
                x = io::decode_matrix(doc, amb);
                y = io::decode_matrix(read_document(other), amb);
            }
            emit(json{{"contains", closure_contains(x, y)}}, common);
            return kOk;
        };
    });

    auto* ideal = app.add_subcommand("ideal", "Generators cutting out the closure fiber over a quotient point");
    add_common(ideal, common);
    ideal->callback([&] {
        action = [&] {
            emit(io::encode(weyman_generators(io::decode_quotient_point(read_document(common.input)))), common);
            return kOk;
        };
    });

    bool with_basis = false;
    auto* central = app.add_subcommand("centralizer", "Centralizer dimension report of x");
    add_common(central, common);
    central->add_flag("--basis", with_basis, "Include a basis of the centralizer");
    central->callback([&] {
        action = [&] {
            const auto x = matrix_input(common);
            json out = io::encode(centralizer_report(x, x.ambient()));
            out["ambient"] = to_string(x.ambient());
            if (with_basis) {
                out["basis"] = io::encode(centralizer(x, x.ambient()));
            }
            emit(out, common);
            return kOk;
        };
    });

    int sheets_n = 3;
    auto* sheets = app.add_subcommand("sheets", "All sheets of sl(n)");
    add_common(sheets, common, false);
    sheets->add_option("-n,--n", sheets_n, "Matrix size")->capture_default_str();
    sheets->callback([&] {
        action = [&] {
            if (sheets_n < 1) {
                throw InputError("--n must be positive");
            }
            if (sheets_n > kSheetsLimit) {
                throw ResourceGuardError("sheets: n is limited to " + std::to_string(kSheetsLimit));
            }
            json out = json::array();
            for (const auto& d : enumerate_sheets(sheets_n)) {
                out.push_back(io::encode(d));
            }
            emit(out, common);
            return kOk;
        };
    });

    VerifyOptions vopt;
    bool sequential = false;
    bool no_elapsed = false;
    auto* verify = app.add_subcommand("verify", "Run the property suite over every module");
    add_common(verify, common, false);
    verify->add_option("--n-max", vopt.n_max, "Largest matrix size")->capture_default_str();
    verify->add_option("--seed", vopt.seed, "Random seed")->capture_default_str();
    verify->add_option("--samples", vopt.samples, "Samples per sheet")->capture_default_str();
    verify->add_option("--size-limit", vopt.size_limit, "Largest accepted --n-max")->capture_default_str();
    verify->add_flag("--sequential", sequential, "Run cases one at a time");
    verify->add_flag("--no-elapsed", no_elapsed, "Omit wall-clock time from the report");
    verify->add_option("--inject-fault", vopt.inject_fault)->group("")->check(CLI::IsMember({"tower"}));
    verify->callback([&] {
        action = [&] {
            vopt.parallel = !sequential;
            const auto report = run_verification(vopt);
            emit(report.to_json(!no_elapsed), common);
            return report.all_passed() ? kOk : kVerifyFailed;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        return action();
    } catch (const ShapeError& e) {
        std::cerr << "shape error: " << e.what() << '\n';
        return kShape;
    } catch (const TraceError& e) {
        std::cerr << "trace error: " << e.what() << '\n';
        return kTrace;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const ResourceGuardError& e) {
        std::cerr << "resource guard: " << e.what() << '\n';
        return kGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    }
}
