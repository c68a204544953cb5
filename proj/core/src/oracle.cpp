#include "gf2trace/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace gf2trace::oracle {

using field::enumerate_subfield;
using field::frob;
using field::in_subfield;
using field::subfield_basis;
using field::tmap;

std::vector<Elt> brute_solve(unsigned n, unsigned k, unsigned l, const Elt& a) {
    if (l == 0 || k % l != 0) throw std::invalid_argument("brute_solve: l must divide k");
    if (n > 20) throw std::invalid_argument("brute_solve: n > 20");
    if (!in_subfield(a, n)) throw std::invalid_argument("brute_solve: a not in GF(2^n)");
    std::vector<Elt> out;
    for (const auto& x : enumerate_subfield(a.ctx(), n)) {
        if (tmap(x, l, k) == a) out.push_back(x);
    }
    return out;  // enumerate_subfield is already sorted
}

CoordSystem::CoordSystem(const FieldCtxPtr& ctx, unsigned n)
    : n_(n), basis_(subfield_basis(ctx, n)), reducer_(ctx->m()) {
    for (const auto& b : basis_) {
        if (!reducer_.insert(b.coeff_words()))
            throw std::logic_error("CoordSystem: dependent basis");
    }
}

std::vector<std::uint64_t> CoordSystem::coords(const Elt& y) const {
    auto combo = reducer_.combination(y.coeff_words());
    if (!combo) throw std::invalid_argument("CoordSystem::coords: element outside the subfield");
    combo->resize((n_ + 63) / 64);
    return *combo;
}

Elt CoordSystem::from_coords(const std::vector<std::uint64_t>& bits) const {
    Elt acc = Elt::zero(basis_.front().ctx());
    for (unsigned i = 0; i < n_; ++i) {
        if (vec_bit(bits, i)) acc = acc + basis_[i];
    }
    return acc;
}

const CoordSystem& subfield_coords(const FieldCtxPtr& ctx, unsigned n) {
    static std::mutex mu;
    static std::map<std::pair<std::string, unsigned>, std::unique_ptr<CoordSystem>> cache;
    std::lock_guard lk(mu);
    auto key = std::make_pair(ctx->modulus().to_hex(), n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<CoordSystem>(ctx, n)).first;
    return *it->second;
}

Gf2Matrix tlk_matrix(unsigned n, unsigned k, unsigned l, const FieldCtxPtr& ctx) {
    const auto& cs = subfield_coords(ctx, n);
    Gf2Matrix a(n, n);
    for (unsigned j = 0; j < n; ++j) {
        auto col = cs.coords(tmap(cs.basis()[j], l, k));
        for (unsigned i = 0; i < n; ++i) a.set(i, j, vec_bit(col, i));
    }
    return a;
}

SolutionSet linalg_solve(unsigned n, unsigned k, unsigned l, const Elt& a) {
    if (l == 0 || k % l != 0) throw std::invalid_argument("linalg_solve: l must divide k");
    if (n > 64) throw std::invalid_argument("linalg_solve: n > 64");
    if (!in_subfield(a, n)) throw std::invalid_argument("linalg_solve: a not in GF(2^n)");
    const auto& ctx = a.ctx();
    const auto& cs = subfield_coords(ctx, n);
    Gf2Matrix mat = tlk_matrix(n, k, l, ctx);

    auto rhs_coords = cs.coords(a);
    std::vector<std::uint64_t> rhs((n + 63) / 64, 0);
    for (unsigned i = 0; i < n; ++i) vec_set_bit(rhs, i, vec_bit(rhs_coords, i));

    auto lin = mat.solve(rhs);
    SolutionSet sol;
    sol.solvable = lin.solvable;
    if (!lin.solvable) return sol;
    sol.particular = cs.from_coords(lin.particular);
    for (const auto& v : lin.nullspace) sol.kernel_basis.push_back(cs.from_coords(v));
    return sol;
}

SolutionSet half_trace_solve(unsigned n, const Elt& a) {
    if (!in_subfield(a, n)) throw std::invalid_argument("half_trace_solve: a not in GF(2^n)");
    const auto& ctx = a.ctx();
    if (!tmap(a, 1, n).is_zero()) return SolutionSet::unsolvable();

    Elt delta = Elt::one(ctx);
    if (n % 2 == 0) {
        bool found = false;
        for (const auto& b : subfield_basis(ctx, n)) {
            if (tmap(b, 1, n).is_one()) {
                delta = b;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("half_trace_solve: no trace-1 basis element");
    }

    // x0 = sum_{i=0}^{n-2} (sum_{j=i+1}^{n-1} delta^(2^j)) a^(2^i)
    std::vector<Elt> delta_pow;  // delta^(2^j)
    delta_pow.push_back(delta);
    for (unsigned j = 1; j < n; ++j) delta_pow.push_back(frob(delta_pow.back(), 1));
    std::vector<Elt> suffix(n + 1, Elt::zero(ctx));  // suffix[i] = sum_{j>=i} delta^(2^j)
    for (unsigned j = n; j-- > 0;) suffix[j] = suffix[j + 1] + delta_pow[j];

    Elt x0 = Elt::zero(ctx);
    Elt a_pow = a;
    for (unsigned i = 0; i + 1 < n; ++i) {
        x0 = x0 + suffix[i + 1] * a_pow;
        a_pow = frob(a_pow, 1);
    }
    return SolutionSet{true, x0, {Elt::one(ctx)}};
}

}  // namespace gf2trace::oracle
