#ifndef GF2TRACE_ORACLE_HPP
#define GF2TRACE_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "gf2trace/field.hpp"
#include "gf2trace/gf2matrix.hpp"
#include "gf2trace/solver.hpp"

namespace gf2trace::oracle {

using field::Elt;
using field::FieldCtxPtr;
using solver::SolutionSet;

/// Exhaustive scan of GF(2^n) for tmap(x,l,k) = a; canonically sorted.
/// Requires l | k and n <= 20; k may exceed n.
std::vector<Elt> brute_solve(unsigned n, unsigned k, unsigned l, const Elt& a);

/// Classical method: tmap(.,l,k) as an n x n GF(2) matrix over a subfield
/// basis, solved by Gaussian elimination. Requires n <= 64; k may exceed n.
SolutionSet linalg_solve(unsigned n, unsigned k, unsigned l, const Elt& a);

/// Matrix of x -> tmap(x,l,k) restricted to GF(2^n) in subfield-basis
/// coordinates (exposed for rank inspection and benchmarks).
Gf2Matrix tlk_matrix(unsigned n, unsigned k, unsigned l, const FieldCtxPtr& ctx);

/// Coordinates in a fixed GF(2^n) subfield basis. Construction does one
/// Gaussian elimination; coords() is then a cheap reduction. Cached per
/// (modulus, n) behind subfield_coords().
class CoordSystem {
  public:
    CoordSystem(const FieldCtxPtr& ctx, unsigned n);

    unsigned dim() const { return n_; }
    const std::vector<Elt>& basis() const { return basis_; }
    /// Packed coordinate bits of y over the basis; throws if y is outside GF(2^n).
    std::vector<std::uint64_t> coords(const Elt& y) const;
    Elt from_coords(const std::vector<std::uint64_t>& bits) const;

  private:
    unsigned n_;
    std::vector<Elt> basis_;
    BitRowBasis reducer_;
};

const CoordSystem& subfield_coords(const FieldCtxPtr& ctx, unsigned n);

/// Classical half-trace quadratic solver for x^2 + x = a over GF(2^n);
/// delta = 1 for odd n, otherwise a basis element of trace 1.
SolutionSet half_trace_solve(unsigned n, const Elt& a);

}  // namespace gf2trace::oracle

#endif
