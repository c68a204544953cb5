#ifndef GF2TRACE_SERIALIZE_HPP
#define GF2TRACE_SERIALIZE_HPP

#include <json.hpp>

#include "gf2trace/lawcheck.hpp"
#include "gf2trace/solver.hpp"

namespace gf2trace {

/// {solvable, particular, kernel_basis: [hex], count, ambient: {m, modulus}}
nlohmann::json to_json(const solver::SolutionSet& sol, const field::FieldCtxPtr& ctx);

nlohmann::json to_json(const oracle::LawReport& report);

}  // namespace gf2trace

#endif
