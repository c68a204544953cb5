#ifndef GF2TRACE_LAWCHECK_HPP
#define GF2TRACE_LAWCHECK_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace gf2trace::oracle {

struct LawResult {
    std::string name;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::string first_counterexample;

    bool pass() const { return trials > 0 && failures == 0; }
};

struct LawReport {
    std::vector<LawResult> laws;

    bool all_pass() const;
    const LawResult* find(const std::string& name) const;
};

/// Algebraic identity suite: trace composition laws, membership duality and
/// theorems, the mu-coset covering, and xi-independence of solution sets.
/// Random laws draw `samples` trials each; enumeration laws count elements.
LawReport check_laws(unsigned max_n, unsigned max_k, std::uint64_t samples,
                     std::uint64_t seed = 1);

/// Closed-form solver vs the independent oracles, exhaustively over
/// (n <= max_n, k <= n, l | k) and every a in GF(2^n); also covers solution
/// counts, solvability, classification, closure consistency and k > n spot
/// checks. `jobs` fans instances out across threads; the report is
/// deterministic regardless.
LawReport check_solver_equivalence(unsigned max_n, unsigned jobs = 1);

/// Half-trace vs closed-form quadratic solver, n in 2..max_n, seeded solvable
/// right-hand sides, cross-checked against brute force.
LawResult check_quadratic_cross(unsigned max_n, unsigned samples_per_n,
                                std::uint64_t seed = 7);

}  // namespace gf2trace::oracle

#endif
