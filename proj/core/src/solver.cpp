#include "gf2trace/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "gf2trace/gf2matrix.hpp"

namespace gf2trace::solver {

using field::frob;
using field::gcd_u;
using field::in_subfield;
using field::lcm_u;
using field::mu_xi;
using field::subfield_basis;
using field::tmap;

Instance Instance::make(unsigned n, unsigned k, unsigned l, Elt a) {
    if (n == 0 || k == 0 || l == 0 || k % l != 0)
        throw std::invalid_argument("Instance: need positive n, k and l | k");
    unsigned m = 2 * lcm_u(n, k);
    if (a.ctx()->m() != m)
        throw std::invalid_argument("Instance: a must live in the ambient field of degree 2*lcm(n,k)");
    if (!in_subfield(a, n)) throw std::invalid_argument("Instance: a is not in GF(2^n)");
    unsigned d = gcd_u(n, k);
    return Instance{n, k, l, std::move(a), d, gcd_u(d, l), lcm_u(n, k)};
}

std::uint64_t SolutionSet::count() const {
    if (!solvable) return 0;
    if (kernel_basis.size() >= 64) throw std::logic_error("SolutionSet::count: kernel too large");
    return std::uint64_t{1} << kernel_basis.size();
}

std::vector<Elt> SolutionSet::enumerate(std::size_t cap) const {
    if (!solvable) return {};
    if (count() > cap) throw std::invalid_argument("SolutionSet::enumerate: count exceeds cap");
    std::vector<Elt> out;
    out.reserve(count());
    Elt cur = *particular;
    out.push_back(cur);
    for (std::uint64_t idx = 1; idx < count(); ++idx) {
        unsigned flip = 0;
        std::uint64_t v = idx;
        while (!(v & 1)) {
            v >>= 1;
            ++flip;
        }
        cur = cur + kernel_basis[flip];
        out.push_back(cur);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// independent subset of generator images, certified by GF(2) elimination
std::vector<Elt> independent_subset(const std::vector<Elt>& gens) {
    if (gens.empty()) return {};
    BitRowBasis basis(gens.front().ctx()->m());
    std::vector<Elt> out;
    for (const auto& g : gens) {
        if (!g.is_zero() && basis.insert(g.coeff_words())) out.push_back(g);
    }
    return out;
}

void check_solution(const Instance& inst, const Elt& x) {
    if (!in_subfield(x, inst.n) || !(tmap(x, inst.l, inst.k) == inst.a))
        throw std::logic_error("solver: closed-form produced a non-solution");
}

}  // namespace

std::vector<Elt> kernel_tlk(const FieldCtxPtr& ctx, unsigned n, unsigned k, unsigned l) {
    if (l == 0 || k % l != 0) throw std::invalid_argument("kernel_tlk: l must divide k");
    if (k > n) throw std::invalid_argument("kernel_tlk: requires k <= n");
    unsigned d = gcd_u(n, k);
    unsigned g = gcd_u(d, l);
    auto d_basis = subfield_basis(ctx, d);
    if ((k / lcm_u(d, l)) % 2 == 0) return d_basis;
    // odd case: image of T_(d,l) o T_2 on GF(2^d), dimension d - (d,l)
    std::vector<Elt> gens;
    gens.reserve(d);
    for (const auto& b : d_basis) gens.push_back(tmap(tmap(b, 1, 2), 1, g));
    auto kernel = independent_subset(gens);
    if (kernel.size() != d - g) throw std::logic_error("kernel_tlk: unexpected kernel dimension");
    return kernel;
}

bool solvable_tlk(const Instance& inst) {
    Elt t = tmap(inst.a, inst.d, inst.n);
    if ((inst.k / lcm_u(inst.d, inst.l)) % 2 == 0) return t.is_zero();
    return in_subfield(t, inst.g);
}

SolutionSet solve_artin_schreier(unsigned n, unsigned k, const Elt& a, unsigned xi_choice) {
    if (k == 0 || k >= n) throw std::invalid_argument("solve_artin_schreier: requires 1 <= k < n");
    if (a.ctx()->m() != 2 * lcm_u(n, k))
        throw std::invalid_argument("solve_artin_schreier: a not in the ambient field");
    if (!in_subfield(a, n)) throw std::invalid_argument("solve_artin_schreier: a not in GF(2^n)");
    const auto& ctx = a.ctx();
    unsigned d = gcd_u(n, k);
    if (!tmap(a, d, n).is_zero()) return SolutionSet::unsolvable();

    Elt x = Elt::zero(ctx);
    if (!a.is_zero()) {
        Elt xi = mu_xi(ctx, n, xi_choice);
        Elt u_inv = (xi + Elt::one(ctx)).inv();
        if ((k / d) % 2 == 1) {
            x = tmap(a * u_inv, k, lcm_u(n, k));
        } else {
            x = tmap(frob(a, n - k) * u_inv, n - k, lcm_u(n, n - k));
        }
        if (!in_subfield(x, n) || !(frob(x, k) + x == a))
            throw std::logic_error("solve_artin_schreier: formula produced a non-solution");
    }
    return SolutionSet{true, x, subfield_basis(ctx, d)};
}

SolutionSet solve_quadratic(unsigned n, const Elt& a, unsigned xi_choice) {
    if (n == 0) throw std::invalid_argument("solve_quadratic: n must be positive");
    if (a.ctx()->m() != 2 * n)
        throw std::invalid_argument("solve_quadratic: a not in the ambient field of degree 2n");
    if (!in_subfield(a, n)) throw std::invalid_argument("solve_quadratic: a not in GF(2^n)");
    const auto& ctx = a.ctx();
    if (!tmap(a, 1, n).is_zero()) return SolutionSet::unsolvable();

    Elt x0 = Elt::zero(ctx);
    if (!a.is_zero()) {
        Elt xi = mu_xi(ctx, n, xi_choice);
        x0 = tmap(a * (xi + Elt::one(ctx)).inv(), 1, n);
        if (!in_subfield(x0, n) || !(x0 * x0 + x0 == a))
            throw std::logic_error("solve_quadratic: formula produced a non-solution");
    }
    return SolutionSet{true, x0, {Elt::one(ctx)}};
}

SolutionSet solve_tk(unsigned n, unsigned k, const Elt& a, unsigned xi_choice) {
    if (k == 0 || k > n) throw std::invalid_argument("solve_tk: requires 1 <= k <= n");
    Instance inst = Instance::make(n, k, 1, a);
    const auto& ctx = a.ctx();
    unsigned d = inst.d;
    Elt t = tmap(a, d, n);

    SolutionSet sol;
    sol.solvable = ((k / d) % 2 == 1) ? in_subfield(t, 1) : t.is_zero();
    if (!sol.solvable) return sol;

    Elt x = Elt::zero(ctx);
    if (!a.is_zero()) {
        Elt xi = mu_xi(ctx, n, xi_choice);
        Elt u_inv = (xi + Elt::one(ctx)).inv();
        if ((k / d) % 2 == 1) {
            x = tmap(tmap(a * u_inv, k, inst.lnk), 1, 2);
        } else {
            x = tmap(tmap(frob(a, n - k) * u_inv, n - k, lcm_u(n, n - k)), 1, 2);
        }
        check_solution(inst, x);
    }
    sol.particular = x;
    sol.kernel_basis = kernel_tlk(ctx, n, k, 1);
    return sol;
}

SolutionSet solve_tlk(const Instance& inst, unsigned xi_choice) {
    if (inst.k > inst.n)
        throw std::invalid_argument("solve_tlk: k > n has no closed form here; use oracle::linalg_solve");
    const auto& ctx = inst.a.ctx();
    const unsigned n = inst.n, k = inst.k, l = inst.l, d = inst.d, g = inst.g;
    const bool q_odd = (k / lcm_u(d, l)) % 2 == 1;
    const bool kd_odd = (k / d) % 2 == 1;

    Elt t = tmap(inst.a, d, n);
    SolutionSet sol;
    sol.solvable = q_odd ? in_subfield(t, g) : t.is_zero();
    if (!sol.solvable) return sol;

    Elt x = Elt::zero(ctx);
    if (!inst.a.is_zero()) {
        Elt one = Elt::one(ctx);
        if (q_odd && kd_odd) {
            Elt xi = mu_xi(ctx, n, xi_choice);
            Elt u = inst.a * (xi + one).inv();
            x = tmap(tmap(tmap(u, k, inst.lnk), 1, 2), 1, l);
        } else if (q_odd) {  // k/d even: mixed two-term formula, xi in mu_{2^d+1}
            Elt xi = mu_xi(ctx, d, xi_choice);
            Elt u_inv = (xi + one).inv();
            Elt y = tmap(tmap(tmap(frob(inst.a, n - k) * u_inv, n - k, lcm_u(n, n - k)), 1, 2), 1, l);
            Elt z = tmap(tmap(t * u_inv, 1, 2), 1, g);
            x = y + z;
        } else {
            Elt xi = mu_xi(ctx, d, xi_choice);
            Elt u = frob(inst.a, n - k) * (xi + one).inv();
            x = tmap(tmap(tmap(u, n - k, lcm_u(n, n - k)), 1, 2), 1, l);
        }
        check_solution(inst, x);
    }
    sol.particular = x;
    sol.kernel_basis = kernel_tlk(ctx, n, k, l);
    return sol;
}

SolutionSet solve_closure(const Instance& inst, unsigned xi_choice) {
    const auto& ctx = inst.a.ctx();
    const unsigned k = inst.k, l = inst.l, L = inst.lnk;

    std::vector<Elt> gens;
    for (const auto& b : subfield_basis(ctx, k)) gens.push_back(tmap(tmap(b, 1, 2), 1, l));
    auto kernel = independent_subset(gens);
    if (kernel.size() != k - l) throw std::logic_error("solve_closure: unexpected kernel dimension");

    Elt x = Elt::zero(ctx);
    if (!inst.a.is_zero()) {
        Elt xi = mu_xi(ctx, L, xi_choice);
        Elt u = inst.a * (xi + Elt::one(ctx)).inv();
        x = tmap(tmap(tmap(u, 1, 2), k, L), 1, l);
        if (!(tmap(x, l, k) == inst.a))
            throw std::logic_error("solve_closure: formula produced a non-solution");
    }
    return SolutionSet{true, x, std::move(kernel)};
}

Classification classify(unsigned n, unsigned k, unsigned l) {
    if (n == 0 || k == 0 || l == 0 || k % l != 0)
        throw std::invalid_argument("classify: need positive n, k and l | k");
    unsigned d = gcd_u(n, k);
    unsigned g = gcd_u(d, l);
    unsigned kernel_dim = ((k / lcm_u(d, l)) % 2 == 0) ? d : d - g;

    bool permutation = ((k / l) % 2 == 1) && (l % d == 0);
    bool two_to_one = (d == 1 && (k / l) % 2 == 0) ||
                      (d == 2 && l % 2 == 1 && (k / l) % 2 == 0 && (k / (2 * l)) % 2 == 1);
    MapKind tag = permutation ? MapKind::Permutation
                              : (two_to_one ? MapKind::TwoToOne : MapKind::Other);
    // arithmetic conditions must agree with the kernel dimension
    if ((tag == MapKind::Permutation) != (kernel_dim == 0) ||
        (tag == MapKind::TwoToOne) != (kernel_dim == 1))
        throw std::logic_error("classify: tag inconsistent with kernel dimension");
    return Classification{tag, kernel_dim};
}

const char* to_string(MapKind kind) {
    switch (kind) {
        case MapKind::Permutation:
            return "permutation";
        case MapKind::TwoToOne:
            return "2-to-1";
        default:
            return "other";
    }
}

}  // namespace gf2trace::solver
