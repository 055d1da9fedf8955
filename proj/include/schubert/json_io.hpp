#pragma once

// JSON forms of the engine's values. Integers that fit in 64 bits are
// emitted as JSON numbers, larger ones as decimal strings.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "schubert/grassmann_contexts.hpp"

namespace schubert {

inline nlohmann::json integer_to_json(const Integer& c)
{
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(c);
    return c.str();
}

inline Integer integer_from_json(const nlohmann::json& j)
{
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw invalid_input("expected an integer");
}

inline nlohmann::json context_to_json(const GrassmannContext& ctx)
{
    return {{"k", ctx.k}, {"n", ctx.n}, {"mode", to_string(ctx.mode)}};
}

inline nlohmann::json element_terms_to_json(const SchubertElement& e)
{
    // SchubertElement is ordered by (nu, d), which is the required order
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : e) terms.push_back({{"nu", key.first.parts()}, {"d", key.second}, {"coeff", integer_to_json(c)}});
    return terms;
}

/// {"context":{...},"entries":[{"lambda":[..],"mu":[..],"terms":[{"nu":[..],"d":..,"coeff":..}]}]}
inline nlohmann::json to_json(const StructureTable& table)
{
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [pair, product] : table.entries)
        entries.push_back({{"lambda", pair.first.parts()}, {"mu", pair.second.parts()}, {"terms", element_terms_to_json(product)}});
    return {{"context", context_to_json(table.context)}, {"entries", std::move(entries)}};
}

inline StructureTable structure_table_from_json(const nlohmann::json& j)
{
    const auto& c = j.at("context");
    StructureTable table{GrassmannContext(c.at("k").get<int>(), c.at("n").get<int>(), parse_mode(c.at("mode").get<std::string>())), {}};
    for (const auto& entry : j.at("entries")) {
        SchubertElement product;
        for (const auto& t : entry.at("terms"))
            add_to(product, Partition(t.at("nu").get<std::vector<int>>()), t.at("d").get<unsigned>(), integer_from_json(t.at("coeff")));
        table.entries.emplace(std::make_pair(Partition(entry.at("lambda").get<std::vector<int>>()),
                                             Partition(entry.at("mu").get<std::vector<int>>())),
                              std::move(product));
    }
    return table;
}

inline nlohmann::json to_json(const KVector& v)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [sym, c] : v.terms())
        for (const auto& [d, x] : c.coefficients())
            terms.push_back({{"symbol", sym.indices()}, {"q", d}, {"coeff", integer_to_json(x)}});
    return {{"degree", v.degree()}, {"terms", std::move(terms)}, {"text", to_string(v)}};
}

inline nlohmann::json to_json(const DPolynomial& p)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [lambda, c] : p.terms()) terms.push_back({{"monomial", lambda.parts()}, {"coeff", integer_to_json(c)}});
    return {{"terms", std::move(terms)}, {"text", to_string(p)}};
}

inline nlohmann::json to_json(const SchubertElement& e)
{
    return {{"terms", element_terms_to_json(e)}, {"text", to_string(e)}};
}

inline nlohmann::json to_json(const PresentationReport& r)
{
    nlohmann::json rel = nlohmann::json::array();
    for (const auto& c : r.checked_relations)
        rel.push_back({{"name", c.name}, {"relation", c.polynomial}, {"holds", c.holds}, {"witness", to_string(c.witness)}});
    return {{"k", r.k}, {"n", r.n}, {"mode", to_string(r.mode)}, {"all_hold", r.all_hold()}, {"checked_relations", std::move(rel)}};
}

} // namespace schubert
