#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ivsearch/errors.hpp"
#include "ivsearch/util.hpp"

namespace ivsearch {

using json = nlohmann::json;

enum class Design { Iv, ConditionalIndependence, DiffInDiff, RegressionDiscontinuity };

inline const char* design_name(Design d) {
    switch (d) {
        case Design::Iv: return "iv";
        case Design::ConditionalIndependence: return "ci";
        case Design::DiffInDiff: return "did";
        case Design::RegressionDiscontinuity: return "rdd";
    }
    return "iv";
}

inline Design design_from_name(const std::string& s) {
    std::string v = util::to_lower(util::trim(s));
    if (v == "iv") return Design::Iv;
    if (v == "ci" || v == "conditional_independence") return Design::ConditionalIndependence;
    if (v == "did" || v == "diff_in_diff") return Design::DiffInDiff;
    if (v == "rdd" || v == "regression_discontinuity") return Design::RegressionDiscontinuity;
    throw ValidationError("unknown design: \"" + s + "\" (expected iv|ci|did|rdd)");
}

/// Assumptions a pipeline step targets.
enum class AssumptionTag { REL, EX, IND, REL2, CI, PT, RD };

inline const char* assumption_name(AssumptionTag t) {
    switch (t) {
        case AssumptionTag::REL: return "REL";
        case AssumptionTag::EX: return "EX";
        case AssumptionTag::IND: return "IND";
        case AssumptionTag::REL2: return "REL2";
        case AssumptionTag::CI: return "CI";
        case AssumptionTag::PT: return "PT";
        case AssumptionTag::RD: return "RD";
    }
    return "?";
}

/// Initial/refined list sizes per design. An unset refined count means the
/// model is asked to choose all qualifying factors itself.
struct SearchBudget {
    std::optional<int> k0, k;  // IV search / refine
    std::optional<int> l0, l;  // control-variable search / refine
    std::optional<int> j0, j;  // running-variable search / refine
};

/// Either concrete attribute assignments or attribute names to be rendered
/// with a "specific ..." qualifier.
struct Covariates {
    std::vector<std::string> specific;
    std::vector<std::string> loose;

    bool empty() const { return specific.empty() && loose.empty(); }

    // Specific values win when both are present.
    std::string clause() const {
        if (!specific.empty()) return util::join(specific, ", ");
        if (!loose.empty()) return "specific " + util::oxford_join(loose);
        return "";
    }
};

/// Distinguished confounder description for users who prefer not to commit
/// to a particular latent story.
inline constexpr const char* kAgnosticConfounders = "other possible factors";

struct CausalQuery {
    Design design = Design::Iv;
    std::string agent;
    std::string scenario;
    std::string treatment;
    std::string outcome;
    std::string outcome_t;  // time-indexed outcome label, used by did flows
    std::string confounders;
    Covariates covariates;
    SearchBudget budgets;
    std::vector<std::string> category_split;
};

struct Violation {
    std::string field;
    std::string rule;
    std::string message;
};

inline std::vector<Violation> validate_query(const CausalQuery& q) {
    std::vector<Violation> out;
    auto require_nonempty = [&](const std::string& value, const char* field) {
        if (util::trim(value).empty())
            out.push_back({field, "non-empty", std::string(field) + " must be non-empty"});
    };
    require_nonempty(q.agent, "agent");
    require_nonempty(q.scenario, "scenario");
    require_nonempty(q.treatment, "treatment");
    require_nonempty(q.outcome, "outcome");

    auto require_budget = [&](const std::optional<int>& v, const char* field) {
        if (!v)
            out.push_back({field, "required-for-design",
                           std::string(field) + " is required for design " + design_name(q.design)});
    };
    switch (q.design) {
        case Design::Iv:
            require_budget(q.budgets.k0, "budgets.k0");
            require_nonempty(q.confounders, "confounders");
            break;
        case Design::ConditionalIndependence:
            require_budget(q.budgets.l0, "budgets.l0");
            break;
        case Design::DiffInDiff:
            require_budget(q.budgets.l0, "budgets.l0");
            require_nonempty(q.outcome_t, "outcome_t");
            break;
        case Design::RegressionDiscontinuity:
            require_budget(q.budgets.j0, "budgets.j0");
            break;
    }

    auto check_pair = [&](const std::optional<int>& initial, const std::optional<int>& refined,
                          const char* initial_field, const char* refined_field) {
        if (initial && *initial <= 0)
            out.push_back({initial_field, "positive", std::string(initial_field) + " must be positive"});
        if (refined && *refined <= 0)
            out.push_back({refined_field, "positive", std::string(refined_field) + " must be positive"});
        if (initial && refined && *refined > *initial)
            out.push_back({refined_field, "refined-le-initial",
                           std::string(refined_field) + " must not exceed " + initial_field});
    };
    check_pair(q.budgets.k0, q.budgets.k, "budgets.k0", "budgets.k");
    check_pair(q.budgets.l0, q.budgets.l, "budgets.l0", "budgets.l");
    check_pair(q.budgets.j0, q.budgets.j, "budgets.j0", "budgets.j");
    return out;
}

inline void require_valid(const CausalQuery& q) {
    auto violations = validate_query(q);
    if (violations.empty()) return;
    std::string msg = "invalid query:";
    for (const auto& v : violations) msg += "\n  " + v.field + ": " + v.message;
    throw ValidationError(msg);
}

// ---------------------------------------------------------------------------
// Valid-instrument DAG

enum class DagNode { Z, D, Y, U };

inline const char* dag_node_name(DagNode n) {
    switch (n) {
        case DagNode::Z: return "Z";
        case DagNode::D: return "D";
        case DagNode::Y: return "Y";
        case DagNode::U: return "U";
    }
    return "?";
}

/// Four-node graph encoding what a valid instrument looks like: the
/// instrument moves the treatment, the treatment moves the outcome, and the
/// latent confounder touches treatment and outcome but never the instrument.
struct IvDag {
    std::vector<DagNode> nodes{DagNode::Z, DagNode::D, DagNode::Y, DagNode::U};
    std::set<std::pair<DagNode, DagNode>> edges;

    bool has_edge(DagNode a, DagNode b) const { return edges.count({a, b}) > 0; }

    bool acyclic() const {
        // Exhaustive over the 4 nodes: look for any directed cycle.
        for (DagNode start : nodes) {
            std::vector<DagNode> stack{start};
            std::set<DagNode> seen;
            while (!stack.empty()) {
                DagNode cur = stack.back();
                stack.pop_back();
                for (const auto& e : edges) {
                    if (e.first != cur) continue;
                    if (e.second == start) return false;
                    if (seen.insert(e.second).second) stack.push_back(e.second);
                }
            }
        }
        return true;
    }
};

inline IvDag iv_dag_for(const CausalQuery& q) {
    if (q.design != Design::Iv)
        throw WrongDesignError(std::string("iv_dag_for requires an iv query, got ") +
                               design_name(q.design));
    IvDag dag;
    dag.edges = {{DagNode::Z, DagNode::D},
                 {DagNode::D, DagNode::Y},
                 {DagNode::U, DagNode::D},
                 {DagNode::U, DagNode::Y}};
    return dag;
}

// ---------------------------------------------------------------------------
// JSON form. Key names are the on-disk contract; see README.

inline json budgets_to_json(const SearchBudget& b) {
    json j = json::object();
    auto put = [&](const char* key, const std::optional<int>& v) {
        if (v) j[key] = *v;
    };
    put("k0", b.k0);
    put("k", b.k);
    put("l0", b.l0);
    put("l", b.l);
    put("j0", b.j0);
    put("j", b.j);
    return j;
}

inline json query_to_json(const CausalQuery& q) {
    json j;
    j["design"] = design_name(q.design);
    j["agent"] = q.agent;
    j["scenario"] = q.scenario;
    j["treatment"] = q.treatment;
    j["outcome"] = q.outcome;
    if (!q.outcome_t.empty()) j["outcome_t"] = q.outcome_t;
    if (!q.confounders.empty()) j["confounders"] = q.confounders;
    if (!q.covariates.empty()) {
        json cov = json::object();
        if (!q.covariates.specific.empty()) cov["specific"] = q.covariates.specific;
        if (!q.covariates.loose.empty()) cov["loose"] = q.covariates.loose;
        j["covariates"] = cov;
    }
    j["budgets"] = budgets_to_json(q.budgets);
    if (!q.category_split.empty()) j["category_split"] = q.category_split;
    return j;
}

inline CausalQuery query_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("query file must hold a JSON object");
    CausalQuery q;
    try {
        q.design = design_from_name(j.at("design").get<std::string>());
        q.agent = j.value("agent", "");
        q.scenario = j.value("scenario", "");
        q.treatment = j.value("treatment", "");
        q.outcome = j.value("outcome", "");
        q.outcome_t = j.value("outcome_t", "");
        q.confounders = j.value("confounders", "");
        if (j.contains("covariates") && !j["covariates"].is_null()) {
            const json& cov = j["covariates"];
            if (cov.contains("specific")) q.covariates.specific = cov["specific"].get<std::vector<std::string>>();
            if (cov.contains("loose")) q.covariates.loose = cov["loose"].get<std::vector<std::string>>();
        }
        if (j.contains("budgets") && !j["budgets"].is_null()) {
            const json& b = j["budgets"];
            auto get = [&](const char* key) -> std::optional<int> {
                if (!b.contains(key) || b[key].is_null()) return std::nullopt;
                return b[key].get<int>();
            };
            q.budgets.k0 = get("k0");
            q.budgets.k = get("k");
            q.budgets.l0 = get("l0");
            q.budgets.l = get("l");
            q.budgets.j0 = get("j0");
            q.budgets.j = get("j");
        }
        if (j.contains("category_split") && !j["category_split"].is_null())
            q.category_split = j["category_split"].get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed query JSON: ") + e.what());
    }
    return q;
}

/// Stable content hash used to decide whether two runs answered the same query.
inline std::string query_hash(const CausalQuery& q) {
    return util::sha256_hex(query_to_json(q).dump());
}

}  // namespace ivsearch
