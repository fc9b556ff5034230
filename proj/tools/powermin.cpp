// powermin: global minimizers of power-law interaction energies.
//
//   powermin minimize    --gamma G --alpha A --n N [--dim D] [--restarts R] [--seed S] [--tol T] [--out FILE]
//   powermin sweep       --gamma G --alpha A --n-list 8,16,... [--dim D] [--restarts R] [--seed S] [--out FILE]
//   powermin verify      --suite NAME [--out FILE]
//   powermin closed-form --n N [--out FILE]
//
// Exit codes: 0 success, 2 invalid arguments, 3 verification failure.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "powermin/analysis.hpp"
#include "powermin/io.hpp"
#include "powermin/optimizer.hpp"
#include "powermin/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Args {
    double gamma = 0.0;
    double alpha = 0.0;
    long long n = 0;
    long long dim = 1;
    std::string n_list;
    long long restarts = 16;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    std::string init = "perturbed-grid";
    std::string out;
    std::string suite;
};

void emit(const std::string& out, const std::string& text) {
    if (out.empty())
        std::cout << text << '\n';
    else
        powermin::write_text_file(out, text + '\n');
}

powermin::GlobalOptions global_options(const Args& a) {
    if (a.restarts < 1) throw UsageError("--restarts must be at least 1");
    if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");
    powermin::GlobalOptions g;
    g.restarts = static_cast<std::size_t>(a.restarts);
    g.seed = a.seed;
    g.optimizer.tol_grad = a.tol;
    try {
        g.init_strategy = powermin::parse_init_strategy(a.init);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return g;
}

powermin::Potential potential(const Args& a) {
    try {
        return powermin::Potential(a.gamma, a.alpha);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::size_t dimension(const Args& a) {
    if (a.dim < 1) throw UsageError("--dim must be at least 1");
    return static_cast<std::size_t>(a.dim);
}

std::vector<std::size_t> parse_n_list(const std::string& text) {
    std::vector<std::size_t> ns;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        long long v = 0;
        std::size_t used = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw UsageError("--n-list entry '" + item + "' is not an integer");
        }
        if (used != item.size()) throw UsageError("--n-list entry '" + item + "' is not an integer");
        if (v < 1) throw UsageError("--n-list entries must be at least 1");
        ns.push_back(static_cast<std::size_t>(v));
        pos = comma + 1;
    }
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    return ns;
}

int cmd_minimize(const Args& a) {
    const auto p = potential(a);
    if (a.n < 1) throw UsageError("--n must be at least 1");
    const auto g = global_options(a);
    const auto result = powermin::global_minimize(p, static_cast<std::size_t>(a.n), dimension(a), g);
    emit(a.out, powermin::minimize_result_to_json(result, 2));
    return kExitOk;
}

int cmd_sweep(const Args& a) {
    const auto p = potential(a);
    const auto g = global_options(a);
    const auto dim = dimension(a);
    const auto ns = parse_n_list(a.n_list);

    std::vector<powermin::SweepRecord> rows;
    for (std::size_t n : ns) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = powermin::global_minimize(p, n, dim, g);
        const auto t1 = std::chrono::steady_clock::now();

        powermin::SweepRecord rec;
        rec.n = n;
        rec.gamma = p.gamma();
        rec.alpha = p.alpha();
        rec.dim = dim;
        rec.seed = g.seed;
        rec.restarts = g.restarts;
        rec.energy = r.energy;
        rec.diameter = powermin::diameter(r.config);
        rec.min_gap = n >= 2 ? powermin::min_gap(r.config) : 0.0;
        rec.grad_inf_norm = r.grad_inf_norm;
        rec.iterations = r.iterations;
        rec.converged = r.converged;
        rec.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        rows.push_back(rec);
        std::cerr << "n=" << n << " diameter=" << rec.diameter << " energy=" << rec.energy
                  << (rec.converged ? "" : " (not converged)") << '\n';
    }
    const auto csv = powermin::sweep_csv(rows);
    if (a.out.empty())
        std::cout << csv;
    else
        powermin::write_text_file(a.out, csv);
    return kExitOk;
}

int cmd_verify(const Args& a) {
    const auto& names = powermin::verify_suite_names();
    if (std::find(names.begin(), names.end(), a.suite) == names.end())
        throw UsageError("unknown suite '" + a.suite + "'");
    const auto report = powermin::run_verify_suite(a.suite);
    emit(a.out, report.to_json(2));
    return report.overall_pass() ? kExitOk : kExitVerifyFailed;
}

int cmd_closed_form(const Args& a) {
    if (a.n < 1) throw UsageError("--n must be at least 1");
    emit(a.out, powermin::configuration_to_json(powermin::quadratic_newtonian_minimizer(static_cast<std::size_t>(a.n)), 2));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Global minimizers of repulsive-attractive power-law interaction energies"};
    app.require_subcommand(1);
    Args a;

    auto* minimize = app.add_subcommand("minimize", "Multi-start global minimization of E_n");
    minimize->add_option("--gamma", a.gamma, "Attractive exponent")->required();
    minimize->add_option("--alpha", a.alpha, "Repulsive exponent (alpha < gamma)")->required();
    minimize->add_option("--n", a.n, "Number of particles")->required();
    minimize->add_option("--dim", a.dim, "Space dimension")->capture_default_str();
    minimize->add_option("--restarts", a.restarts, "Independent restarts")->capture_default_str();
    minimize->add_option("--seed", a.seed, "Base seed")->capture_default_str();
    minimize->add_option("--tol", a.tol, "Gradient infinity-norm tolerance")->capture_default_str();
    minimize->add_option("--init", a.init, "uniform-box or perturbed-grid")->capture_default_str();
    minimize->add_option("--out", a.out, "Output file (default stdout)");

    auto* sweep = app.add_subcommand("sweep", "Diameter versus n sweep written as CSV");
    sweep->add_option("--gamma", a.gamma, "Attractive exponent")->required();
    sweep->add_option("--alpha", a.alpha, "Repulsive exponent (alpha < gamma)")->required();
    sweep->add_option("--n-list", a.n_list, "Comma-separated particle counts")->required();
    sweep->add_option("--dim", a.dim, "Space dimension")->capture_default_str();
    sweep->add_option("--restarts", a.restarts, "Independent restarts per n")->capture_default_str();
    sweep->add_option("--seed", a.seed, "Base seed")->capture_default_str();
    sweep->add_option("--tol", a.tol, "Gradient infinity-norm tolerance")->capture_default_str();
    sweep->add_option("--init", a.init, "uniform-box or perturbed-grid")->capture_default_str();
    sweep->add_option("--out", a.out, "Output CSV (default stdout)");

    auto* verify = app.add_subcommand("verify", "Run a named verification suite");
    verify->add_option("--suite", a.suite, "uniqueness|symmetry|confinement|spreading|quadratic-newtonian|case1-bounds|gradient-fd")
        ->required();
    verify->add_option("--out", a.out, "Output file (default stdout)");

    auto* closed_form = app.add_subcommand("closed-form", "Minimizer for gamma=2, alpha=1 in 1D");
    closed_form->add_option("--n", a.n, "Number of particles")->required();
    closed_form->add_option("--out", a.out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "powermin: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*minimize) return cmd_minimize(a);
        if (*sweep) return cmd_sweep(a);
        if (*verify) return cmd_verify(a);
        if (*closed_form) return cmd_closed_form(a);
    } catch (const UsageError& e) {
        std::cerr << "powermin: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "powermin: " << e.what() << '\n';
        return 1;
    }
    return kExitUsage;
}
