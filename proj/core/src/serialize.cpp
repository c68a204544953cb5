#include "gf2trace/serialize.hpp"

namespace gf2trace {

nlohmann::json to_json(const solver::SolutionSet& sol, const field::FieldCtxPtr& ctx) {
    nlohmann::json j;
    j["solvable"] = sol.solvable;
    if (sol.particular) j["particular"] = sol.particular->to_hex();
    auto basis = nlohmann::json::array();
    for (const auto& b : sol.kernel_basis) basis.push_back(b.to_hex());
    j["kernel_basis"] = std::move(basis);
    j["count"] = sol.count();
    j["ambient"] = {{"m", ctx->m()}, {"modulus", ctx->modulus().to_hex()}};
    return j;
}

nlohmann::json to_json(const oracle::LawReport& report) {
    auto laws = nlohmann::json::array();
    for (const auto& law : report.laws) {
        nlohmann::json j{{"name", law.name},
                         {"trials", law.trials},
                         {"failures", law.failures}};
        if (!law.first_counterexample.empty()) j["first_counterexample"] = law.first_counterexample;
        laws.push_back(std::move(j));
    }
    return {{"laws", std::move(laws)}, {"all_pass", report.all_pass()}};
}

}  // namespace gf2trace
