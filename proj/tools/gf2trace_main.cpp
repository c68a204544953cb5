// command-line front end: solve / kernel / classify / verify / sample /
// field-info / bench
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "gf2trace/bench.hpp"
#include "gf2trace/field.hpp"
#include "gf2trace/lawcheck.hpp"
#include "gf2trace/oracle.hpp"
#include "gf2trace/serialize.hpp"
#include "gf2trace/solver.hpp"

namespace {

using namespace gf2trace;
using field::FieldCtxPtr;

constexpr int kExitOk = 0;
constexpr int kExitUnsolvable = 1;
constexpr int kExitUsage = 2;

FieldCtxPtr build_ctx(unsigned n, unsigned k, const std::string& modulus_hex) {
    unsigned m = 2 * field::lcm_u(n, k);
    if (modulus_hex.empty()) return field::ambient_ctx(n, k);
    return field::make_ctx(m, BitPoly::from_hex(modulus_hex));
}

field::Elt parse_element(const FieldCtxPtr& ctx, unsigned n, const std::string& hex) {
    field::Elt a = field::Elt::from_hex(ctx, hex);
    if (!field::in_subfield(a, n)) {
        throw std::invalid_argument(
            "element " + hex + " is not in GF(2^" + std::to_string(n) +
            ") inside the ambient field of degree " + std::to_string(ctx->m()) +
            " with modulus " + ctx->modulus().to_hex() +
            "; use `sample --n " + std::to_string(n) + "` to obtain valid inputs");
    }
    return a;
}

int run_solve(unsigned n, unsigned k, unsigned l, const std::string& a_hex,
              const std::string& modulus_hex, bool json) {
    auto ctx = build_ctx(n, k, modulus_hex);
    auto inst = solver::Instance::make(n, k, l, parse_element(ctx, n, a_hex));
    auto sol = solver::solve_tlk(inst);

    if (json) {
        nlohmann::json j = to_json(sol, ctx);
        j["equation"] = {{"n", n}, {"k", k}, {"l", l}};
        std::cout << j.dump(2) << "\n";
    } else if (!sol.solvable) {
        std::cout << "unsolvable\n";
    } else {
        std::cout << "solvable, " << sol.count() << " solution" << (sol.count() == 1 ? "" : "s")
                  << " in GF(2^" << n << ")\n";
        std::cout << "particular: " << sol.particular->to_hex() << "\n";
        std::cout << "kernel basis:";
        for (const auto& b : sol.kernel_basis) std::cout << ' ' << b.to_hex();
        std::cout << "\n";
        if (sol.count() <= 64) {
            std::cout << "solutions:";
            for (const auto& x : sol.enumerate()) std::cout << ' ' << x.to_hex();
            std::cout << "\n";
        }
    }
    return sol.solvable ? kExitOk : kExitUnsolvable;
}

int run_kernel(unsigned n, unsigned k, unsigned l, const std::string& modulus_hex, bool json) {
    auto ctx = build_ctx(n, k, modulus_hex);
    auto kernel = solver::kernel_tlk(ctx, n, k, l);
    if (json) {
        auto basis = nlohmann::json::array();
        for (const auto& b : kernel) basis.push_back(b.to_hex());
        nlohmann::json j{{"equation", {{"n", n}, {"k", k}, {"l", l}}},
                         {"kernel_basis", std::move(basis)},
                         {"dimension", kernel.size()},
                         {"ambient", {{"m", ctx->m()}, {"modulus", ctx->modulus().to_hex()}}}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "kernel dimension: " << kernel.size() << "\nbasis:";
        for (const auto& b : kernel) std::cout << ' ' << b.to_hex();
        std::cout << "\n";
    }
    return kExitOk;
}

int run_classify(unsigned n, unsigned k, unsigned l, bool json) {
    auto cls = solver::classify(n, k, l);
    if (json) {
        nlohmann::json j{{"equation", {{"n", n}, {"k", k}, {"l", l}}},
                         {"tag", solver::to_string(cls.tag)},
                         {"kernel_dim", cls.kernel_dim}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << solver::to_string(cls.tag) << " (kernel dimension " << cls.kernel_dim << ")\n";
    }
    return kExitOk;
}

void print_report(const oracle::LawReport& report) {
    for (const auto& law : report.laws) {
        std::cout << (law.pass() ? "PASS" : "FAIL") << "  " << law.name << "  (" << law.trials
                  << " trials, " << law.failures << " failures";
        if (!law.first_counterexample.empty()) std::cout << "; first: " << law.first_counterexample;
        std::cout << ")\n";
    }
}

int run_verify(unsigned max_n, unsigned max_k, std::uint64_t samples, std::uint64_t seed,
               unsigned jobs, bool json) {
    oracle::LawReport report = oracle::check_laws(max_n, max_k, samples, seed);
    auto equivalence = oracle::check_solver_equivalence(max_n, jobs);
    report.laws.insert(report.laws.end(), equivalence.laws.begin(), equivalence.laws.end());
    report.laws.push_back(
        oracle::check_quadratic_cross(std::max(max_n, 2u), std::max<std::uint64_t>(samples / 10, 20), seed));

    if (json)
        std::cout << to_json(report).dump(2) << "\n";
    else
        print_report(report);
    return report.all_pass() ? kExitOk : kExitUnsolvable;
}

int run_sample(unsigned n, unsigned k, std::uint64_t seed, bool json) {
    auto ctx = field::ambient_ctx(n, k);
    auto a = field::sample_subfield(ctx, n, seed);
    if (json) {
        nlohmann::json j{{"n", n},
                         {"a", a.to_hex()},
                         {"ambient", {{"m", ctx->m()}, {"modulus", ctx->modulus().to_hex()}}}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << a.to_hex() << "\n";
    }
    return kExitOk;
}

int run_field_info(unsigned n, unsigned k, bool json) {
    auto ctx = field::ambient_ctx(n, k);
    auto basis = field::subfield_basis(ctx, n);
    if (json) {
        auto b = nlohmann::json::array();
        for (const auto& e : basis) b.push_back(e.to_hex());
        nlohmann::json j{{"m", ctx->m()},
                         {"modulus", ctx->modulus().to_hex()},
                         {"subfield_n", n},
                         {"subfield_basis", std::move(b)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "ambient degree m = " << ctx->m() << " (= 2*lcm(" << n << "," << k << "))\n";
        std::cout << "modulus: " << ctx->modulus().to_hex() << "\n";
        std::cout << "GF(2^" << n << ") basis:";
        for (const auto& e : basis) std::cout << ' ' << e.to_hex();
        std::cout << "\n";
    }
    return kExitOk;
}

int run_bench_cmd(const std::string& grid_spec, unsigned iters, bool include_setup,
                  const std::string& out_path) {
    auto grid = bench::parse_grid(grid_spec);
    auto rows = bench::run_bench(grid, iters, include_setup);
    if (out_path.empty() || out_path == "-") {
        bench::write_csv(rows, std::cout);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("bench: cannot open output file " + out_path);
        bench::write_csv(rows, out);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"roots of affine trace equations T_l^k(x) = a over binary fields"};
    app.require_subcommand(1);

    unsigned n = 0, k = 0, l = 1;
    std::string a_hex, modulus_hex, grid_spec, out_path;
    bool json = false, include_setup = false;
    unsigned max_n = 6, max_k = 0, jobs = 1, iters = 25;
    std::uint64_t samples = 1000, seed = 1;

    auto* solve = app.add_subcommand("solve", "solve T_l^k(x) = a in GF(2^n)");
    solve->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    solve->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    solve->add_option("--l", l)->required()->check(CLI::PositiveNumber);
    solve->add_option("--a", a_hex, "right-hand side, hex, ambient coordinates")->required();
    solve->add_option("--modulus", modulus_hex, "ambient modulus override, hex");
    solve->add_flag("--json", json);

    auto* kernel = app.add_subcommand("kernel", "kernel basis of T_l^k on GF(2^n)");
    kernel->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    kernel->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    kernel->add_option("--l", l)->required()->check(CLI::PositiveNumber);
    kernel->add_option("--modulus", modulus_hex);
    kernel->add_flag("--json", json);

    auto* classify = app.add_subcommand("classify", "permutation / 2-to-1 classification");
    classify->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    classify->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    classify->add_option("--l", l)->required()->check(CLI::PositiveNumber);
    classify->add_flag("--json", json);

    auto* verify = app.add_subcommand("verify", "run the law and solver verification suites");
    verify->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
    verify->add_option("--max-k", max_k, "defaults to --max-n");
    verify->add_option("--samples", samples)->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed);
    verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    verify->add_flag("--json", json);

    auto* sample = app.add_subcommand("sample", "print a valid GF(2^n) input element");
    sample->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    sample->add_option("--k", k, "ambient sized for this k (default n)");
    sample->add_option("--seed", seed);
    sample->add_flag("--json", json);

    auto* field_info = app.add_subcommand("field-info", "ambient field and subfield basis");
    field_info->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    field_info->add_option("--k", k, "defaults to n");
    field_info->add_flag("--json", json);

    auto* bench_cmd = app.add_subcommand("bench", "closed-form vs classical method timings, CSV");
    bench_cmd->add_option("--grid", grid_spec, "grid points \"n,k,l;n,k,l;...\"")->required();
    bench_cmd->add_option("--iters", iters)->check(CLI::PositiveNumber);
    bench_cmd->add_flag("--include-setup", include_setup);
    bench_cmd->add_option("--out", out_path, "CSV path, '-' for stdout");

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

    try {
        if (solve->parsed()) return run_solve(n, k, l, a_hex, modulus_hex, json);
        if (kernel->parsed()) return run_kernel(n, k, l, modulus_hex, json);
        if (classify->parsed()) return run_classify(n, k, l, json);
        if (verify->parsed())
            return run_verify(max_n, max_k == 0 ? max_n : max_k, samples, seed, jobs, json);
        if (sample->parsed()) return run_sample(n, k == 0 ? n : k, seed, json);
        if (field_info->parsed()) return run_field_info(n, k == 0 ? n : k, json);
        if (bench_cmd->parsed()) return run_bench_cmd(grid_spec, iters, include_setup, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
