#ifndef GF2TRACE_SOLVER_HPP
#define GF2TRACE_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gf2trace/field.hpp"

namespace gf2trace::solver {

using field::Elt;
using field::FieldCtxPtr;

/// Solve request for tmap(x, l, k) = a over GF(2^n); a lives in the ambient
/// context of degree 2*lcm(n,k).
struct Instance {
    unsigned n, k, l;
    Elt a;
    unsigned d, g, lnk;  // gcd(n,k), gcd(d,l), lcm(n,k)

    static Instance make(unsigned n, unsigned k, unsigned l, Elt a);
};

/// Coset of solutions: particular element plus a GF(2)-basis of the kernel.
struct SolutionSet {
    bool solvable = false;
    std::optional<Elt> particular;
    std::vector<Elt> kernel_basis;

    std::uint64_t count() const;
    /// All solutions, canonically sorted; throws when count exceeds cap.
    std::vector<Elt> enumerate(std::size_t cap = std::size_t{1} << 20) const;

    static SolutionSet unsolvable() { return SolutionSet{}; }
};

/// GF(2)-basis of {x in GF(2^n) : tmap(x,l,k) = 0}; requires l | k, k <= n,
/// ctx of degree divisible by 2n (ambient of the instance).
std::vector<Elt> kernel_tlk(const FieldCtxPtr& ctx, unsigned n, unsigned k, unsigned l);

/// Solvability predicate of the closed-form theorem (no solving).
bool solvable_tlk(const Instance& inst);

/// x^(2^k) + x = a over GF(2^n), 1 <= k < n; a in ambient_ctx(n, k).
SolutionSet solve_artin_schreier(unsigned n, unsigned k, const Elt& a, unsigned xi_choice = 0);

/// x^2 + x = a over GF(2^n); a in ambient_ctx(n, 1).
SolutionSet solve_quadratic(unsigned n, const Elt& a, unsigned xi_choice = 0);

/// tmap(x, 1, k) = a over GF(2^n), 1 <= k <= n.
SolutionSet solve_tk(unsigned n, unsigned k, const Elt& a, unsigned xi_choice = 0);

/// tmap(x, l, k) = a over GF(2^n); requires k <= n (use the linear-algebra
/// oracle for k > n).
SolutionSet solve_tlk(const Instance& inst, unsigned xi_choice = 0);

/// All 2^(k-l) roots of tmap(x, l, k) = a over the algebraic closure,
/// realized inside the ambient field of degree 2*lcm(n,k).
SolutionSet solve_closure(const Instance& inst, unsigned xi_choice = 0);

enum class MapKind { Permutation, TwoToOne, Other };

struct Classification {
    MapKind tag;
    unsigned kernel_dim;
};

/// Arithmetic classification of x -> tmap(x,l,k) on GF(2^n); k > n allowed.
Classification classify(unsigned n, unsigned k, unsigned l);

const char* to_string(MapKind kind);

}  // namespace gf2trace::solver

#endif
