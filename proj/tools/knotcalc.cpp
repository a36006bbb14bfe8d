#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "knotcalc/checks.hpp"
#include "knotcalc/errors.hpp"
#include "knotcalc/invariants.hpp"
#include "knotcalc/knots.hpp"
#include "knotcalc/reduce.hpp"

namespace {

using knotcalc::Rational;

nlohmann::ordered_json breakpoints_json(const knotcalc::PLFunction& f) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& [t, v] : f.breakpoints())
        list.push_back({knotcalc::to_string(t), knotcalc::to_string(v)});
    return list;
}

int cmd_invariants(const std::string& expr_text) {
    knotcalc::InvariantReport r = knotcalc::invariants_of(knotcalc::parse_knot(expr_text));
    nlohmann::ordered_json out;
    out["tau"] = r.tau;
    out["epsilon"] = r.epsilon;
    if (r.a1)
        out["a1"] = *r.a1;
    else
        out["a1"] = nullptr;
    out["upsilon"] = {{"breakpoints", breakpoints_json(r.upsilon)}};
    out["max_slope"] = knotcalc::to_string(r.genus_bound_slope);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_upsilon(const std::string& expr_text, int samples, bool breakpoints) {
    knotcalc::PLFunction u = knotcalc::upsilon_knot(knotcalc::parse_knot(expr_text));
    if (breakpoints || samples <= 0) {
        for (const auto& [t, v] : u.breakpoints())
            std::cout << "(" << knotcalc::to_string(t) << "," << knotcalc::to_string(v) << ")\n";
        return 0;
    }
    std::cout << "t,value\n";
    for (int k = 0; k <= samples; ++k) {
        Rational t(2 * k, samples);
        std::cout << knotcalc::to_string(t) << "," << knotcalc::to_string(u.evaluate(t)) << "\n";
    }
    return 0;
}

int cmd_complex(const std::string& expr_text, const std::string& export_path, bool standard) {
    knotcalc::BifilteredComplex c = knotcalc::build(knotcalc::parse_knot(expr_text));
    if (standard) {
        auto form = knotcalc::standard_form(c);
        if (!form) {
            std::cerr << "error: complex is not standard\n";
            return 1;
        }
        std::cout << "[";
        for (std::size_t i = 0; i < form->lengths.size(); ++i)
            std::cout << (i ? "," : "") << form->lengths[i];
        std::cout << "]\n";
        return 0;
    }
    std::string document = c.serialize();
    if (export_path.empty()) {
        std::cout << document << "\n";
        return 0;
    }
    std::ofstream out(export_path);
    if (!out) {
        std::cerr << "error: cannot write " << export_path << "\n";
        return 1;
    }
    out << document << "\n";
    return 0;
}

int cmd_verify() {
    bool all_ok = true;
    for (const knotcalc::CheckResult& r : knotcalc::run_verification_checks()) {
        if (r.passed) {
            std::cout << "PASS " << r.id << ": " << r.description << "\n";
        } else {
            all_ok = false;
            std::cout << "FAIL " << r.id << ": " << r.description << " -- " << r.detail << "\n";
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact concordance-invariant calculator for torus/cable knot expressions"};
    app.require_subcommand(1);

    std::string expr_text;
    auto* inv = app.add_subcommand("invariants", "tau, epsilon, a1, upsilon and the genus bound");
    inv->add_option("expr", expr_text, "knot expression, e.g. \"T(2,5) # -T(4,5)\"")->required();

    int samples = 0;
    bool breakpoints = false;
    auto* ups = app.add_subcommand("upsilon", "exact upsilon of a knot expression");
    ups->add_option("expr", expr_text, "knot expression")->required();
    auto* opt_samples = ups->add_option("--samples", samples, "CSV rows at t = 2k/N, k = 0..N");
    auto* opt_bp = ups->add_flag("--breakpoints", breakpoints, "list exact breakpoints (default)");
    opt_samples->excludes(opt_bp);

    std::string export_path;
    bool standard = false;
    auto* cpx = app.add_subcommand("complex", "build the full CFK model of an expression");
    cpx->add_option("expr", expr_text, "knot expression")->required();
    auto* opt_export = cpx->add_option("--export", export_path, "write the document to a file");
    auto* opt_std = cpx->add_flag("--standard-form", standard, "print the chain form instead");
    opt_export->excludes(opt_std);

    app.add_subcommand("verify-paper", "run the pinned verification manifest");

    // Mirror expressions start with '-' (e.g. "-T(2,3)"); move them behind
    // a "--" separator so the option parser treats them as positionals.
    std::vector<std::string> args, exprs;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg.size() > 1 && arg[0] == '-' &&
            (std::isupper(static_cast<unsigned char>(arg[1])) ||
             std::isdigit(static_cast<unsigned char>(arg[1])) || arg[1] == '('))
            exprs.push_back(std::move(arg));
        else
            args.push_back(std::move(arg));
    }
    if (!exprs.empty()) {
        args.push_back("--");
        args.insert(args.end(), exprs.begin(), exprs.end());
    }
    try {
        // CLI11 consumes the argument list back to front.
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& err) {
        return app.exit(err);
    }

    try {
        if (inv->parsed()) return cmd_invariants(expr_text);
        if (ups->parsed()) return cmd_upsilon(expr_text, samples, breakpoints);
        if (cpx->parsed()) return cmd_complex(expr_text, export_path, standard);
        return cmd_verify();
    } catch (const knotcalc::Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
