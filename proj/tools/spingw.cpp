// Command-line front door: compute single invariants, run the verification
// suites, emit closed-form tables, and read/write the value registry.

#include "spingw/closed_forms.hpp"
#include "spingw/registry.hpp"
#include "spingw/suites.hpp"
#include "spingw/sum_engine.hpp"
#include "spingw/trr_engine.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace spingw;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_input_error = 2;

std::string pretty_key(const std::string& key) {
    try {
        return InvariantKey::parse(key).pretty();
    } catch (const std::exception&) {
        return key;
    }
}

std::string pretty_combo(const SymbolicCombo& combo) {
    SymbolicCombo repr;
    for (const auto& [mono, c] : combo.terms()) {
        std::string key;
        for (const std::string& f : SymbolicCombo::monomial_factors(mono)) {
            if (!key.empty())
                key += "*";
            key += pretty_key(f);
        }
        repr.add_term(key.empty() ? SymbolicCombo::unit_key : key, c);
    }
    return repr.str();
}

nlohmann::json combo_json(const SymbolicCombo& combo) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : combo.terms())
        j[k] = v.str();
    return j;
}

void print_trace_text(const ReductionTrace& trace, std::ostream& out) {
    for (const auto& step : trace.steps())
        out << step.rule << ": " << pretty_combo(step.before) << "  =>  "
            << pretty_combo(step.after) << "\n";
}

struct ComputeArgs {
    int d = 1;
    int h = 0;
    std::string parity = "+";
    std::vector<int> ks;
    std::string m1;
    std::string m2;
    bool two_sided = false;
    bool trace = false;
    std::string format = "text";
};

int emit_value(const Rational& value, const std::string& format) {
    if (format == "json")
        std::cout << nlohmann::json{{"value", value.str()}}.dump() << "\n";
    else
        std::cout << value.str() << "\n";
    return exit_ok;
}

int run_compute(const std::string& op, const ComputeArgs& a) {
    if (op == "dim0")
        return emit_value(gt_dim0(a.d, SpinKey(a.h, parse_parity(a.parity))), a.format);
    if (op == "gw0")
        return emit_value(gw_dim0(a.d, SpinKey(a.h, parse_parity(a.parity))), a.format);
    if (op == "mp")
        return emit_value(descendant_closed_form(a.d, SpinKey(a.h, parse_parity(a.parity)), a.ks),
                          a.format);
    if (op == "f0")
        return emit_value(f0_relative(a.d, a.two_sided), a.format);
    if (op == "base-abs")
        return emit_value(base_absolute(a.d), a.format);
    if (op == "base-rel")
        return emit_value(base_relative(a.d), a.format);
    if (op == "f1") {
        if (a.m1.empty() || a.m2.empty())
            throw std::invalid_argument("f1 needs --m1 and --m2");
        SymbolicCombo c = f1_contribution(Partition::parse(a.m1), Partition::parse(a.m2));
        if (a.format == "json")
            std::cout << nlohmann::json{{"combo", combo_json(c)}}.dump() << "\n";
        else
            std::cout << pretty_combo(c) << "\n";
        return exit_ok;
    }
    if (op == "reduce") {
        auto r = reduce_genus_zero(SpinKey(a.h, parse_parity(a.parity)));
        SymbolicCombo combo = SymbolicCombo::symbol(
            contact_two_symbol(SpinKey(0, Parity::even)), r.coeff);
        if (a.format == "json") {
            nlohmann::json j{{"combo", combo_json(combo)}};
            if (a.trace)
                j["trace"] = r.trace.to_json();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << pretty_combo(combo) << "\n";
            if (a.trace)
                print_trace_text(r.trace, std::cout);
        }
        return exit_ok;
    }
    throw std::invalid_argument("unknown compute operation \"" + op + "\"");
}

int run_verify(const std::string& suite, const SuiteOptions& opt) {
    auto results = run_suite(suite, opt);
    int failed = 0;
    for (const auto& r : results) {
        if (r.pass) {
            std::cout << "ok   " << r.name << "\n";
        } else {
            ++failed;
            std::cout << "FAIL " << r.name;
            if (!r.detail.empty())
                std::cout << " [" << r.detail << "]";
            std::cout << "\n";
        }
    }
    if (failed == 0) {
        std::cout << "PASS, " << results.size() << " identities\n";
        return exit_ok;
    }
    std::cout << "FAIL, " << failed << " of " << results.size() << " identities\n";
    return exit_verify_failed;
}

int run_table(int h_max, const std::string& format, const std::string& out_path) {
    std::ostringstream body;
    if (format == "json") {
        Registry table;
        for (int h = 0; h <= h_max; ++h)
            for (Parity p : {Parity::even, Parity::odd}) {
                if (h == 0 && p == Parity::odd)
                    continue;
                for (int d : {1, 2})
                    table.set(InvariantKey::absolute(SpinKey(h, p), d),
                              gt_dim0(d, SpinKey(h, p)));
            }
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [k, v] : table.entries())
            j[k] = v.str();
        body << j.dump(2) << "\n";
    } else {
        if (format == "text")
            body << "h parity d value\n";
        for (int h = 0; h <= h_max; ++h)
            for (Parity p : {Parity::even, Parity::odd}) {
                if (h == 0 && p == Parity::odd)
                    continue;
                for (int d : {1, 2}) {
                    const char sep = format == "csv" ? ',' : ' ';
                    body << h << sep << parity_char(p) << sep << d << sep
                         << gt_dim0(d, SpinKey(h, p)).str() << "\n";
                }
            }
    }
    if (out_path.empty()) {
        std::cout << body.str();
        return exit_ok;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write output path \"" << out_path << "\"\n";
        return exit_input_error;
    }
    out << body.str();
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for local spin-curve GW/GT invariants"};
    app.require_subcommand(1);
    // --h is a domain flag (genus), so help is long-form only
    app.set_help_flag("--help", "print this help message and exit");

    ComputeArgs ca;
    std::string registry_path;
    std::string suite = "all";
    SuiteOptions opt;
    std::string table_format = "text";
    std::string out_path;
    int table_hmax = 16;

    CLI::App* compute = app.add_subcommand("compute", "evaluate one invariant or reduction");
    compute->require_subcommand(1);
    std::vector<CLI::App*> compute_ops;
    for (const char* name : {"dim0", "gw0", "mp", "f0", "f1", "base-abs", "base-rel", "reduce"}) {
        CLI::App* sub = compute->add_subcommand(name);
        sub->set_help_flag("--help", "print this help message and exit");
        sub->add_option("--d", ca.d, "degree");
        sub->add_option("--h", ca.h, "genus");
        sub->add_option("--parity", ca.parity, "parity, + or -");
        sub->add_option("--k", ca.ks, "descendant exponents, comma separated")->delimiter(',');
        sub->add_option("--m1", ca.m1, "contact partition, e.g. \"(1,1)\"");
        sub->add_option("--m2", ca.m2, "contact partition, e.g. \"(2)\"");
        sub->add_flag("--two-sided", ca.two_sided, "contacts with both fibers");
        sub->add_flag("--trace", ca.trace, "print the reduction trace");
        sub->add_option("--format", ca.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        compute_ops.push_back(sub);
    }

    CLI::App* verify = app.add_subcommand("verify", "run the identity verification suites");
    verify->add_option("--suite", suite, "algebra|partitions|closed|sums|reduction|trr|all")
        ->check(CLI::IsMember({"algebra", "partitions", "closed", "sums", "reduction", "trr",
                               "all"}));
    verify->add_option("--hmax", opt.h_max, "genus sweep bound")->check(CLI::PositiveNumber);
    verify->add_option("--dmax", opt.d_max, "degree sweep bound")->check(CLI::PositiveNumber);
    verify->add_option("--wmax", opt.weight_max, "descendant weight sweep bound")
        ->check(CLI::PositiveNumber);
    verify->add_option("--registry", registry_path, "registry JSON to load and cross-check")
        ->envname("SPINGW_REGISTRY");

    CLI::App* table = app.add_subcommand("table", "emit the dimension-zero closed-form table");
    table->add_option("--hmax", table_hmax, "genus bound")->check(CLI::PositiveNumber);
    table->add_option("--format", table_format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    table->add_option("--out", out_path, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    try {
        if (compute->parsed()) {
            for (CLI::App* sub : compute_ops)
                if (sub->parsed())
                    return run_compute(sub->get_name(), ca);
            return exit_input_error;
        }
        if (verify->parsed()) {
            Registry reg;
            if (!registry_path.empty()) {
                reg = Registry::load(registry_path);
                opt.registry = &reg;
            }
            return run_verify(suite, opt);
        }
        if (table->parsed())
            return run_table(table_hmax, table_format, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}
