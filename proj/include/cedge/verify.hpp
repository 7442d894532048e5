/**
 * Exhaustive formula-vs-oracle sweep over every labeled graph on 3..max_n
 * vertices. Disagreements that fall under a known tension are collected
 * separately from genuine mismatches; only the latter make a sweep fail.
 */

#ifndef CEDGE_VERIFY_HPP
#define CEDGE_VERIFY_HPP

#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "graph.hpp"
#include "homology.hpp"
#include "invariants.hpp"
#include "io.hpp"

namespace cedge {

inline constexpr int kVerifyExamplesPerTension = 3;

struct VerificationSummary
{
    int max_n = 0;
    Field field = Field::gf2;
    std::map<int, std::uint64_t> enumerated_by_n;
    std::uint64_t graphs_checked = 0;
    nlohmann::json mismatches = nlohmann::json::array();
    std::map<std::string, nlohmann::json> tensions;   // name -> {"count", "examples"}

    bool ok() const { return mismatches.empty(); }

    void add_tension(const std::string& name, nlohmann::json example)
    {
        auto& entry = tensions[name];
        if (entry.is_null())
            entry = {{"count", 0}, {"examples", nlohmann::json::array()}};
        entry["count"] = entry["count"].get<std::uint64_t>() + 1;
        if (entry["examples"].size() < kVerifyExamplesPerTension)
            entry["examples"].push_back(std::move(example));
    }
};

// Tension names as they appear under "known_tensions".
namespace tension {
inline const std::string complete_pd = "complete_graph_pd";
inline const std::string disconnected_claim5 = "disconnected_forest_linear_resolution";
inline const std::string isolated = "isolated_vertices";
}   // namespace tension

inline void verify_graph(const SimpleGraph& g, Field field, VerificationSummary& summary)
{
    const bool isolated = !isolated_vertices(g).empty();
    const auto predicted = predict_invariants(g);
    const auto oracle = oracle_invariants(g, field);
    const auto report = cross_validate(g, predicted, oracle);

    for (const auto& m : report.mismatches)
    {
        nlohmann::json entry = {
            {"graph", to_json(g)}, {"invariant", m.invariant}, {"predicted", m.predicted}, {"oracle", m.oracle}};
        if (isolated)
            summary.add_tension(tension::isolated, std::move(entry));
        else
            summary.mismatches.push_back(std::move(entry));
    }

    // The literal tree-or-complete statement gives pd(I)=1 for K_n.
    if (predicted.graph_class == GraphClass::complete && oracle.reg_pd.pd_ideal != 1)
        summary.add_tension(tension::complete_pd,
                            {{"graph", to_json(g)}, {"literal_pd_I", 1}, {"oracle_pd_I", oracle.reg_pd.pd_ideal}});

    if (!predicted.licci.licci)
        return;

    if (!huneke_ulrich_check(oracle.reg_pd.reg_quotient, oracle.height, g.order() - 2))
    {
        nlohmann::json entry = {{"graph", to_json(g)},
                                {"invariant", "huneke_ulrich"},
                                {"predicted", true},
                                {"oracle", false}};
        if (isolated)
            summary.add_tension(tension::isolated, std::move(entry));
        else
            summary.mismatches.push_back(std::move(entry));
    }

    const auto suite = implication_suite(g, field);
    for (const auto& claim : suite.failed_claims)
    {
        nlohmann::json entry = {{"graph", to_json(g)}, {"invariant", claim}, {"predicted", true}, {"oracle", false}};
        if (claim == "linear_resolution" && predicted.graph_class == GraphClass::disconnected_forest)
            summary.add_tension(tension::disconnected_claim5, std::move(entry));
        else if (isolated)
            summary.add_tension(tension::isolated, std::move(entry));
        else
            summary.mismatches.push_back(std::move(entry));
    }
}

inline VerificationSummary run_verification(int max_n, Field field)
{
    if (max_n < 3)
        throw DomainError("verify needs --max-n >= 3");
    VerificationSummary summary;
    summary.max_n = max_n;
    summary.field = field;
    for (int n = 3; n <= max_n; ++n)
        for_each_graph(n, [&](const SimpleGraph& g) {
            ++summary.enumerated_by_n[n];
            if (g.size() == 0)
                return;
            ++summary.graphs_checked;
            verify_graph(g, field, summary);
        });
    return summary;
}

inline nlohmann::json to_json(const VerificationSummary& s)
{
    nlohmann::json enumerated = nlohmann::json::object();
    for (const auto& [n, count] : s.enumerated_by_n)
        enumerated[std::to_string(n)] = count;
    nlohmann::json tensions = nlohmann::json::object();
    for (const auto& [name, entry] : s.tensions)
        tensions[name] = entry;
    return {{"max_n", s.max_n},
            {"field", field_name(s.field)},
            {"enumerated_by_n", enumerated},
            {"graphs_checked", s.graphs_checked},
            {"mismatches", s.mismatches},
            {"known_tensions", tensions},
            {"ok", s.ok()}};
}

}   // namespace cedge

#endif
