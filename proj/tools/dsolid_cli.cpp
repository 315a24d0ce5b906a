#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dsolid/report.hpp"

namespace {

using namespace dsolid;

void write_out(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw validation_error("cannot open output file '" + out + "'");
    f << text;
}

std::vector<Int> parse_d(const std::string& s) {
    std::vector<Int> d;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        d.emplace_back(tok);
    }
    if (d.empty()) throw validation_error("empty d-sequence");
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for anti-canonical cycle blow-ups of a quadric:\n"
                 "divisor tables, twist invariants, bitangents and branch-quartic models"};
    app.require_subcommand(1);
    app.fallthrough();  // --format / --out may follow the subcommand

    std::string format = "markdown";
    std::string out;
    app.add_option("--format", format, "markdown, csv or json")->capture_default_str();
    app.add_option("--out", out, "write the report to a file instead of stdout");

    int n = 3;
    int bound = kDefaultEnumBound;
    bool full_configs = false;
    auto* tables = app.add_subcommand("tables", "configuration/divisor tables for one n");
    tables->add_option("--n", n, "number of blown-up conjugate pairs")->required();
    tables->add_option("--bound", bound, "enumeration bound")->capture_default_str();
    tables->add_flag("--full", full_configs,
                     "embed complete configuration JSON per row (json format)");

    std::string config_file, d_string;
    bool ridge1 = true, ridge_k = true;
    auto* analyze = app.add_subcommand("analyze", "invariant report for a configuration");
    analyze->add_option("--config", config_file, "CycleConfig JSON file");
    analyze->add_option("--d", d_string, "raw d-sequence, e.g. 1,3,8,13,5,2");
    analyze->add_flag("--ridge1,!--no-ridge1", ridge1, "blow up the ridge pair at the first node");
    analyze->add_flag("--ridge-k,!--no-ridge-k", ridge_k, "blow up the ridge pair at the last node");

    int n_max = 10;
    bool exhaustive = false;
    auto* fib = app.add_subcommand("fibonacci", "greedy maximal-pair blow-up table");
    fib->add_option("--n-max", n_max, "last n to print")->capture_default_str();
    fib->add_flag("--exhaustive-max", exhaustive,
                  "also print the maximum of e over all enumerated configurations");
    fib->add_option("--bound", bound, "enumeration bound for --exhaustive-max")
        ->capture_default_str();

    std::string type_str = "A0";
    auto* bit = app.add_subcommand("bitangents", "(-1)-class catalog and real bitangents");
    bit->add_option("--type", type_str, "A0, A1, A2 or A3")->required();

    int m = 2;
    std::uint64_t seed = 1;
    int planes = 5;
    auto* qua = app.add_subcommand("quartic", "branch-quartic model and verification");
    qua->add_option("--type", type_str, "A0, A1, A2 or A3")->required();
    qua->add_option("--m", m, "scroll degree")->capture_default_str();
    qua->add_option("--seed", seed, "generator seed")->capture_default_str();
    qua->add_option("--planes", planes, "generic planes to sample")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        const ReportFormat fmt = format_from_string(format);
        std::string text;
        if (tables->parsed()) {
            text = render_tables(n, fmt, bound, full_configs);
        } else if (analyze->parsed()) {
            AnalyzeRequest req;
            req.rc.ridge1 = ridge1;
            req.rc.ridge_k = ridge_k;
            if (!config_file.empty()) {
                std::ifstream f(config_file);
                if (!f) throw validation_error("cannot read '" + config_file + "'");
                json j;
                f >> j;
                req.cfg = cycle_config_from_json(j);
            } else if (!d_string.empty()) {
                req.d = parse_d(d_string);
            } else {
                throw validation_error("analyze needs --config or --d");
            }
            text = render_analyze(req, fmt);
        } else if (fib->parsed()) {
            text = render_fibonacci(n_max, fmt, exhaustive, bound);
        } else if (bit->parsed()) {
            text = render_bitangents(cycle_type_from_string(type_str), fmt);
        } else if (qua->parsed()) {
            text = render_quartic(cycle_type_from_string(type_str), m, seed, planes, fmt);
        }
        write_out(text, out);
        return 0;
    } catch (const invariant_violation& e) {
        std::cerr << "invariant violated [" << e.invariant() << "]: " << e.what() << "\n";
        return 3;
    } catch (const resource_error& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
