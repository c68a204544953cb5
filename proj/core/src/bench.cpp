#include "gf2trace/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "gf2trace/oracle.hpp"
#include "gf2trace/solver.hpp"

namespace gf2trace::bench {

using field::ambient_ctx;
using field::Elt;
using field::lcm_u;
using field::make_ctx;
using field::sample_subfield;
using field::tmap;
using solver::Instance;

namespace {

void validate_grid(const std::vector<GridPoint>& grid) {
    if (grid.empty()) throw std::invalid_argument("benchmark grid is empty");
    for (const auto& p : grid) {
        if (p.n == 0 || p.k == 0 || p.l == 0 || p.k % p.l != 0)
            throw std::invalid_argument("grid point needs positive n, k and l | k");
        if (p.k > p.n) throw std::invalid_argument("closed form requires k <= n in the grid");
        if (p.n > 64) throw std::invalid_argument("grid supports n <= 64");
    }
}

}  // namespace

std::vector<GridPoint> parse_grid(std::string_view spec) {
    std::vector<GridPoint> grid;
    std::string s(spec);
    std::istringstream points(s);
    std::string point;
    while (std::getline(points, point, ';')) {
        if (point.empty()) continue;
        GridPoint p;
        char c1, c2;
        std::istringstream fields(point);
        if (!(fields >> p.n >> c1 >> p.k >> c2 >> p.l) || c1 != ',' || c2 != ',')
            throw std::invalid_argument("parse_grid: expected \"n,k,l\" in '" + point + "'");
        grid.push_back(p);
    }
    validate_grid(grid);
    return grid;
}

namespace {

constexpr unsigned kBruteLimit = 16;

template <typename F>
std::uint64_t median_ns(unsigned iterations, F&& body) {
    std::vector<std::uint64_t> times;
    times.reserve(iterations);
    for (unsigned i = 0; i < iterations; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        body();
        auto t1 = std::chrono::steady_clock::now();
        times.push_back(static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
    }
    std::sort(times.begin(), times.end());
    std::uint64_t med = times[times.size() / 2];
    return med == 0 ? 1 : med;
}

std::vector<BitPoly> sorted_values(const std::vector<Elt>& elts) {
    std::vector<BitPoly> v;
    for (const auto& e : elts) v.push_back(e.value());
    std::sort(v.begin(), v.end());
    return v;
}

// coset equality without enumeration (kernels can be far too large to expand)
bool same_coset(const solver::SolutionSet& x, const solver::SolutionSet& y) {
    if (x.solvable != y.solvable) return false;
    if (!x.solvable) return true;
    if (x.kernel_basis.size() != y.kernel_basis.size()) return false;
    std::size_t m = x.particular->ctx()->m();
    BitRowBasis span(m);
    for (const auto& b : x.kernel_basis) span.insert(b.coeff_words());
    if (span.rank() != x.kernel_basis.size()) return false;
    for (const auto& b : y.kernel_basis)
        if (!span.in_span(b.coeff_words())) return false;
    return span.in_span((*x.particular + *y.particular).coeff_words());
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<GridPoint>& grid, unsigned iterations,
                                bool include_setup, unsigned instances_per_point,
                                std::uint64_t seed) {
    if (iterations < 1) throw std::invalid_argument("run_bench: iterations must be >= 1");
    validate_grid(grid);

    std::vector<BenchRow> rows;
    for (const auto& p : grid) {
        auto ctx = ambient_ctx(p.n, p.k);
        std::vector<Instance> insts;
        for (unsigned i = 0; i < instances_per_point; ++i) {
            Elt a = tmap(sample_subfield(ctx, p.n, seed + i), p.l, p.k);  // solvable
            insts.push_back(Instance::make(p.n, p.k, p.l, a));
        }

        // correctness gate before any timing
        for (const auto& inst : insts) {
            auto closed = solver::solve_tlk(inst);
            auto lin = oracle::linalg_solve(p.n, p.k, p.l, inst.a);
            bool ok = same_coset(closed, lin);
            if (p.n <= kBruteLimit)
                ok = ok && sorted_values(oracle::brute_solve(p.n, p.k, p.l, inst.a)) ==
                               sorted_values(closed.enumerate());
            if (!ok) throw std::logic_error("run_bench: methods disagree; benchmark aborted");
        }

        struct Method {
            const char* name;
            bool enabled;
        };
        const Method methods[] = {
            {"closed-form", true},
            {"linalg", true},
            {"brute", p.n <= kBruteLimit},
        };

        for (const auto& method : methods) {
            if (!method.enabled) continue;
            std::string name = method.name;
            auto solve_all = [&](const field::FieldCtxPtr& c) {
                for (const auto& inst : insts) {
                    // rebind instances onto c so a fresh context is actually used
                    Instance local = (c == ctx) ? inst : Instance::make(p.n, p.k, p.l,
                                                                        Elt(c, inst.a.value()));
                    if (name == "closed-form")
                        (void)solver::solve_tlk(local);
                    else if (name == "linalg")
                        (void)oracle::linalg_solve(p.n, p.k, p.l, local.a);
                    else
                        (void)oracle::brute_solve(p.n, p.k, p.l, local.a);
                }
            };

            solve_all(ctx);  // warm caches for the amortized row
            rows.push_back({p.n, p.k, p.l, name,
                            median_ns(iterations, [&] { solve_all(ctx); }), iterations, true});

            if (include_setup) {
                BitPoly modulus = ctx->modulus();
                rows.push_back({p.n, p.k, p.l, name, median_ns(iterations, [&] {
                                    // fresh context: modulus search and basis setup run cold
                                    unsigned m = 2 * lcm_u(p.n, p.k);
                                    auto fresh = make_ctx(m, canonical_irreducible(m));
                                    if (name == "linalg")
                                        oracle::CoordSystem setup(fresh, p.n);  // basis-change cost
                                    solve_all(fresh);
                                }),
                                iterations, false});
            }
        }
    }
    return rows;
}

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
    out << "n,k,l,method,median_ns,iterations,amortized\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.k << ',' << r.l << ',' << r.method << ',' << r.median_ns << ','
            << r.iterations << ',' << (r.amortized ? 1 : 0) << '\n';
    }
}

}  // namespace gf2trace::bench
