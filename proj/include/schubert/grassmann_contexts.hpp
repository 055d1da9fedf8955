#pragma once

// Products of Schubert classes, structure tables and the Poincare pairing,
// computed by letting Giambelli operators act on basis k-vectors.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <map>
#include <thread>
#include <utility>
#include <vector>

#include "schubert/giambelli_ring.hpp"

namespace schubert {

/// A Z[q]-combination of Schubert classes: (nu, q-degree) -> coefficient.
using SchubertElement = std::map<std::pair<Partition, unsigned>, Integer>;

inline void add_to(SchubertElement& e, const Partition& nu, unsigned d, const Integer& c)
{
    if (c == 0) return;
    auto [it, inserted] = e.try_emplace({nu, d}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) e.erase(it);
    }
}

inline SchubertElement to_element(const KVector& v)
{
    SchubertElement e;
    for (const auto& [sym, c] : v.terms())
        for (const auto& [d, x] : c.coefficients()) add_to(e, symbol_to_partition(sym), d, x);
    return e;
}

inline SchubertElement schubert_class(const Partition& lambda, unsigned q_degree = 0, Integer c = 1)
{
    SchubertElement e;
    add_to(e, lambda, q_degree, c);
    return e;
}

/// Sets q = 0.
inline SchubertElement classical_part(const SchubertElement& e)
{
    SchubertElement out;
    for (const auto& [key, c] : e)
        if (key.second == 0) out.emplace(key, c);
    return out;
}

/// s[2,2] + q*s[] style text: by q-degree, then partitions in decreasing order.
inline std::string to_string(const SchubertElement& e)
{
    std::vector<std::pair<std::pair<unsigned, Partition>, Integer>> ordered;
    for (const auto& [key, c] : e) ordered.push_back({{key.second, key.first}, c});
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first) return a.first.first < b.first.first;
        return a.first.second > b.first.second;
    });
    std::string out;
    for (const auto& [key, c] : ordered)
        detail::append_term(out, c, key.first, "s[" + detail::join_ints(key.second.parts()) + "]");
    return out.empty() ? "0" : out;
}

/// sigma_lambda * sigma_mu in the context: the Giambelli operator of mu, with
/// every D_i (i > k) rewritten in D_1..D_k, acting on e^{I(lambda)}.
inline SchubertElement multiply(const Partition& lambda, const Partition& mu, const GrassmannContext& ctx)
{
    if (!ctx.in_box(lambda) || !ctx.in_box(mu)) throw invalid_input("partition outside the k x (n-k) box");
    const DPolynomial op = reduce_generators(giambelli_det(mu, ctx.k), ctx.k);
    const KVector start = KVector::basis(partition_to_symbol(lambda, ctx.k));
    return to_element(apply_in_context(op, start, ctx));
}

/// Z[q]-bilinear extension of multiply.
inline SchubertElement multiply(const SchubertElement& a, const SchubertElement& b, const GrassmannContext& ctx)
{
    SchubertElement out;
    std::map<std::pair<Partition, Partition>, SchubertElement> memo;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            auto key = std::make_pair(ka.first, kb.first);
            auto it = memo.find(key);
            if (it == memo.end()) it = memo.emplace(key, multiply(ka.first, kb.first, ctx)).first;
            for (const auto& [kc, cc] : it->second) add_to(out, kc.first, kc.second + ka.second + kb.second, ca * cb * cc);
        }
    }
    return out;
}

struct StructureTable {
    GrassmannContext context;
    std::map<std::pair<Partition, Partition>, SchubertElement> entries;
};

/// Products of all box classes with weight at most max_weight (pairs in
/// lexicographic order). Pairs are evaluated on worker threads and written
/// to fixed slots, so the result does not depend on scheduling.
inline StructureTable structure_table(const GrassmannContext& ctx, int max_weight, unsigned threads = 0)
{
    std::vector<Partition> classes;
    if (ctx.mode == Mode::infinite) throw invalid_input("structure tables need a classical or quantum context");
    for (const auto& p : partitions_in_box(ctx.k, ctx.n - ctx.k))
        if (p.weight() <= max_weight) classes.push_back(p);

    std::vector<std::pair<Partition, Partition>> pairs;
    for (const auto& a : classes)
        for (const auto& b : classes) pairs.emplace_back(a, b);

    std::vector<SchubertElement> results(pairs.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(pairs.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < pairs.size(); i = next++) results[i] = multiply(pairs[i].first, pairs[i].second, ctx);
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    StructureTable table{ctx, {}};
    for (std::size_t i = 0; i < pairs.size(); ++i) table.entries.emplace(pairs[i], std::move(results[i]));
    return table;
}

inline StructureTable structure_table(const GrassmannContext& ctx)
{
    return structure_table(ctx, ctx.k * (ctx.n - ctx.k));
}

/// Coefficient of the point class in sigma_lambda * sigma_mu.
inline Integer poincare_pair(const Partition& lambda, const Partition& mu, const GrassmannContext& ctx)
{
    if (ctx.mode != Mode::classical) throw invalid_input("poincare_pair needs a classical context");
    if (!ctx.in_box(lambda) || !ctx.in_box(mu)) throw invalid_input("partition outside the k x (n-k) box");
    if (lambda.weight() + mu.weight() != ctx.k * (ctx.n - ctx.k)) return 0;
    const Partition point(std::vector<int>(static_cast<std::size_t>(ctx.k), ctx.n - ctx.k));
    const auto product = multiply(lambda, mu, ctx);
    auto it = product.find({point, 0u});
    return it == product.end() ? Integer(0) : it->second;
}

} // namespace schubert
