// mhilb: exact generating series of equivariant Hilbert schemes of fat
// points for cyclic actions on the plane. Subcommands compute local series
// by fixed-point enumeration, closed product forms, Log tables, global
// series assembled from a stratification config, and named verification
// suites. Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 config parse error, 4 math-domain error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "motivic/global_series.hpp"
#include "motivic/io.hpp"
#include "motivic/local_series.hpp"
#include "motivic/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;
constexpr int exit_config = 3;
constexpr int exit_domain = 4;

struct render_options {
    std::string format = "text";
    bool euler = false;
};

motivic::series maybe_euler(const motivic::series& s, bool euler) {
    if (!euler) return s;
    motivic::series out(s.order());
    for (unsigned k = 0; k <= s.order(); ++k)
        out[k] = motivic::polynomial(s[k].evaluate(1));
    return out;
}

void print_series(const motivic::series& s, const render_options& opt) {
    const motivic::series r = maybe_euler(s, opt.euler);
    if (opt.format == "json")
        std::cout << motivic::series_to_json(r).dump() << "\n";
    else
        std::cout << r.str();
}

void print_log(const motivic::log_series& l, const render_options& opt) {
    if (opt.euler) {
        // specialize each row at L = 1
        if (opt.format == "json") {
            nlohmann::ordered_json out;
            out["order"] = l.order();
            auto rows = nlohmann::ordered_json::array();
            for (unsigned i : l.rows())
                rows.push_back({i, l.row(i).evaluate(1).str()});
            out["rows"] = rows;
            std::cout << out.dump() << "\n";
        } else {
            for (unsigned i : l.rows())
                std::cout << "T^" << i << ": " << l.row(i).evaluate(1) << "\n";
        }
        return;
    }
    if (opt.format == "json")
        std::cout << motivic::log_to_json(l).dump() << "\n";
    else
        std::cout << l.str();
}

void print_report(const motivic::check_report& rep) {
    for (const auto& line : rep.lines) std::cout << line << "\n";
    std::cout << (rep.passed ? "PASS " : "FAIL ") << rep.name;
    if (!rep.summary.empty()) std::cout << ": " << rep.summary;
    std::cout << "\n";
}

motivic::check_report run_check(const std::string& name, bool has_order, unsigned order) {
    using motivic::check_report;
    if (name == "goettsche") return motivic::check_goettsche(has_order ? order : 12);
    if (name == "theorem2") return motivic::check_theorem2(has_order ? order : 12);
    if (name == "example-cp2") return motivic::check_example_cp2();
    if (name == "conjecture-3-1") return motivic::check_conjecture_3_1(has_order ? order : 21);
    if (name == "remark1") return motivic::check_remark1();
    if (name == "stabilization") return motivic::check_stabilization();
    if (name == "euler-counts") return motivic::check_euler_counts(has_order ? order : 20);
    return motivic::check_power_axioms(has_order ? order : 10);  // power-axioms
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generating series of equivariant Hilbert schemes of fat points"};
    app.require_subcommand(1);

    unsigned M = 1;
    long long N = 0;
    int variant = 1;
    std::string support = "origin";
    unsigned order = 12;
    render_options opt;
    std::string config_path;
    std::string check_name;

    const auto support_values = CLI::IsMember({"origin", "line"});
    const auto format_values = CLI::IsMember({"text", "json"});
    const auto variant_values = CLI::IsMember({1, 2});
    const auto check_values =
        CLI::IsMember({"theorem2", "goettsche", "conjecture-3-1", "remark1",
                       "stabilization", "example-cp2", "power-axioms", "euler-counts"});

    auto add_render_flags = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")->check(format_values);
        cmd->add_flag("--euler", opt.euler, "specialize L := 1 before rendering");
    };
    auto add_action_flags = [&](CLI::App* cmd, bool with_N) {
        cmd->add_option("--M", M, "cyclic group order")->required()->check(CLI::PositiveNumber);
        if (with_N) cmd->add_option("--N", N, "weight of the second coordinate (any integer, reduced mod M)");
        cmd->add_option("--variant", variant, "equivariant Hilbert scheme variant")->check(variant_values);
        cmd->add_option("--support", support, "support of the subschemes")->check(support_values);
        cmd->add_option("--order", order, "truncation order");
    };

    CLI::App* local = app.add_subcommand("local", "local series by fixed-point cell enumeration");
    add_action_flags(local, true);
    add_render_flags(local);

    CLI::App* closed = app.add_subcommand("closed-form", "closed product form for the N = -1 action");
    add_action_flags(closed, false);
    add_render_flags(closed);

    CLI::App* logcmd = app.add_subcommand("log", "Log table of the enumerated local series");
    add_action_flags(logcmd, true);
    add_render_flags(logcmd);

    CLI::App* global = app.add_subcommand("global", "assemble a global series from a stratification config");
    global->add_option("--config", config_path, "path to the JSON config")->required();
    bool order_given = false;
    global->add_option("--order", order, "override the config truncation order")
        ->each([&](const std::string&) { order_given = true; });
    add_render_flags(global);

    CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
    verify->add_option("--check", check_name, "suite name")->required()->check(check_values);
    bool verify_order_given = false;
    verify->add_option("--order", order, "override the default order where meaningful")
        ->each([&](const std::string&) { verify_order_given = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (local->parsed()) {
            const motivic::group_action a(M, N, motivic::variant_from_int(variant));
            const motivic::series s =
                support == "line" ? motivic::line_local_series(a, order)
                                  : motivic::origin_local_series(a, order);
            print_series(s, opt);
        } else if (closed->parsed()) {
            const auto kind = support == "line" ? motivic::support_kind::line
                                                : motivic::support_kind::origin;
            print_series(motivic::closed_form_theorem2(
                             M, motivic::variant_from_int(variant), kind, order),
                         opt);
        } else if (logcmd->parsed()) {
            const motivic::group_action a(M, N, motivic::variant_from_int(variant));
            const motivic::series s =
                support == "line" ? motivic::line_local_series(a, order)
                                  : motivic::origin_local_series(a, order);
            print_log(motivic::log(s), opt);
        } else if (global->parsed()) {
            motivic::stratification spec = motivic::load_stratification_file(config_path);
            if (order_given) spec.order = order;
            print_series(motivic::assemble(spec), opt);
        } else if (verify->parsed()) {
            const motivic::check_report rep =
                run_check(check_name, verify_order_given, order);
            print_report(rep);
            return rep.passed ? exit_ok : exit_mismatch;
        }
    } catch (const motivic::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    } catch (const motivic::non_unit_constant_term& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const motivic::malformed_log& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_domain;
    }
    return exit_ok;
}
