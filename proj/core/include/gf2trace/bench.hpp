#ifndef GF2TRACE_BENCH_HPP
#define GF2TRACE_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace gf2trace::bench {

struct GridPoint {
    unsigned n, k, l;
};

struct BenchRow {
    unsigned n, k, l;
    std::string method;       // closed-form | linalg | brute
    std::uint64_t median_ns;
    std::uint64_t iterations;
    bool amortized;           // false when per-context setup is inside the timed region
};

/// Grid syntax: "n,k,l;n,k,l;...", e.g. "8,4,1;16,8,1".
std::vector<GridPoint> parse_grid(std::string_view spec);

/// Times each method on a fixed seeded set of solvable instances per grid
/// point (median of `iterations` wall-clock runs). All methods must agree on
/// the solution sets before any timing starts. include_setup adds a second
/// row per method with context construction and basis setup inside the timer.
std::vector<BenchRow> run_bench(const std::vector<GridPoint>& grid, unsigned iterations,
                                bool include_setup, unsigned instances_per_point = 4,
                                std::uint64_t seed = 42);

/// Header: n,k,l,method,median_ns,iterations,amortized
void write_csv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace gf2trace::bench

#endif
