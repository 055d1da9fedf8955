#pragma once

// Giambelli determinants in the operators D_i, the reduction of D_h (h > k)
// to a polynomial in D_1, ..., D_k on the k-th exterior power, and checks of
// the classical and quantum ring presentations.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schubert/grassmann_context.hpp"

namespace schubert {

/// Determinant over a commutative ring. Permutation expansion up to 6x6,
/// Laplace expansion along rows with minors cached by column set above.
template <class Ring>
Ring determinant(const std::vector<std::vector<Ring>>& m, const Ring& one, const Ring& zero)
{
    const std::size_t size = m.size();
    if (size == 0) return one;
    auto is_zero = [&](const Ring& x) { return x == zero; };

    if (size <= 6) {
        std::vector<std::size_t> perm(size);
        std::iota(perm.begin(), perm.end(), 0);
        Ring total = zero;
        do {
            int inversions = 0;
            for (std::size_t i = 0; i < size; ++i)
                for (std::size_t j = i + 1; j < size; ++j)
                    if (perm[i] > perm[j]) ++inversions;
            Ring term = one;
            bool vanished = false;
            for (std::size_t i = 0; i < size && !vanished; ++i) {
                const Ring& e = m[i][perm[i]];
                if (is_zero(e))
                    vanished = true;
                else
                    term = term * e;
            }
            if (vanished) continue;
            total = (inversions % 2 == 0) ? Ring(total + term) : Ring(total - term);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return total;
    }

    // minor(row r, columns in mask) with |mask| = size - r
    std::unordered_map<std::uint64_t, Ring> cache;
    auto minor = [&](auto&& self, std::size_t row, std::uint64_t mask) -> Ring {
        if (row == size) return one;
        auto it = cache.find(mask);
        if (it != cache.end()) return it->second;
        Ring total = zero;
        int position = 0;
        for (std::size_t col = 0; col < size; ++col) {
            if (!(mask >> col & 1u)) continue;
            const Ring& e = m[row][col];
            if (!is_zero(e)) {
                Ring sub = self(self, row + 1, mask & ~(std::uint64_t{1} << col));
                Ring term = e * sub;
                total = (position % 2 == 0) ? Ring(total + term) : Ring(total - term);
            }
            ++position;
        }
        cache.emplace(mask, total);
        return total;
    };
    return minor(minor, 0, (size >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << size) - 1));
}

/// det[D_{r_j + j - i}] over rows i and columns j, r_j = lambda_{k+1-j}.
inline DPolynomial giambelli_det(const Partition& lambda, int k)
{
    if (k < 1) throw invalid_input("k must be positive");
    if (lambda.length() > k) throw invalid_input("partition has more than k parts");
    std::vector<std::vector<DPolynomial>> m(static_cast<std::size_t>(k), std::vector<DPolynomial>(static_cast<std::size_t>(k)));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                DPolynomial::generator(lambda.part_from_bottom(j, k) + j - i);
    return determinant(m, DPolynomial::identity(), DPolynomial{});
}

namespace detail {

inline std::mutex& generator_cache_mutex()
{
    static std::mutex m;
    return m;
}

inline std::map<std::pair<int, int>, DPolynomial>& generator_cache()
{
    static std::map<std::pair<int, int>, DPolynomial> cache;
    return cache;
}

} // namespace detail

inline DPolynomial reduce_generator(int h, int k);

/// D_m as an operator on the k-th exterior power, written in D_1..D_k.
inline DPolynomial generator_in(int m, int k)
{
    if (m <= k) return DPolynomial::generator(m);
    return reduce_generator(m, k);
}

/// D_h for h > k as a polynomial in D_1, ..., D_k, from
/// D_h = -(E_1 D_{h-1} + ... + E_k D_{h-k}), which holds on the k-th
/// exterior power because E_j vanishes there for j > k.
inline DPolynomial reduce_generator(int h, int k)
{
    if (k < 1) throw invalid_input("k must be positive");
    if (h <= k) throw invalid_input("reduce_generator needs h > k");
    {
        std::lock_guard lock(detail::generator_cache_mutex());
        auto& cache = detail::generator_cache();
        auto it = cache.find({h, k});
        if (it != cache.end()) return it->second;
    }
    const auto e = inverse_components(k);
    DPolynomial result;
    for (int j = 1; j <= k; ++j) result -= e[static_cast<std::size_t>(j)] * generator_in(h - j, k);
    {
        std::lock_guard lock(detail::generator_cache_mutex());
        detail::generator_cache().try_emplace({h, k}, result);
    }
    return result;
}

/// Rewrites every D_i with i > k through reduce_generator.
inline DPolynomial reduce_generators(const DPolynomial& p, int k)
{
    if (p.max_generator() <= k) return p;
    return substitute(p, [k](int i) { return generator_in(i, k); });
}

/// Y_0, ..., Y_n with sum_i (-1)^i Y_i t^i = 1 / (1 + D_1 t + ... + D_{n-k} t^{n-k}).
inline std::vector<DPolynomial> y_polynomials(int n, int k)
{
    if (k < 1 || k >= n) throw invalid_input("y_polynomials needs 1 <= k < n");
    const int top = n - k;
    std::vector<DPolynomial> c{DPolynomial::identity()};
    for (int m = 1; m <= n; ++m) {
        DPolynomial cm;
        for (int i = 1; i <= std::min(m, top); ++i) cm -= DPolynomial::generator(i) * c[static_cast<std::size_t>(m - i)];
        c.push_back(std::move(cm));
    }
    for (int m = 1; m <= n; m += 2) c[static_cast<std::size_t>(m)] = -c[static_cast<std::size_t>(m)];
    return c;
}

struct RelationCheck {
    std::string name;
    std::string polynomial;  // rendered relation, for display
    bool holds = false;
    KVector witness;         // observed minus expected; zero iff holds
};

struct PresentationReport {
    int k = 0;
    int n = 0;
    Mode mode = Mode::classical;
    std::vector<RelationCheck> checked_relations;

    bool all_hold() const
    {
        return std::all_of(checked_relations.begin(), checked_relations.end(), [](const auto& r) { return r.holds; });
    }
};

namespace detail {

inline RelationCheck action_check(std::string name, const DPolynomial& op, const GrassmannContext& ctx, const KVector& expected)
{
    const KVector fund = KVector::fundamental(ctx.k);
    const KVector observed = apply_in_context(reduce_generators(op, ctx.k), fund, ctx);
    RelationCheck r;
    r.name = std::move(name);
    r.witness = observed - expected;
    r.holds = r.witness.is_zero();
    return r;
}

} // namespace detail

/// Checks the relations of the intersection ring on e^1 ^ ... ^ e^k:
///   classical: D_{n-k+1}, ..., D_n act as zero, and so do Y_{k+1}, ..., Y_n;
///   quantum:   D_{n-k+1}, ..., D_{n-1} act as zero, D_n as (-1)^{k-1} q,
///              Y_{k+1}, ..., Y_{n-1} as zero and Y_n as (-1)^{n-k-1} q.
/// Both modes also check, for j = 1..k and m = n-k+j, the identity
///   (-1)^m E_m = (-1)^{m-1} D_m + Y_m   modulo D_{n-k+1}, ..., D_{m-1}
/// in the free ring Z[D_1, D_2, ...].
inline PresentationReport verify_presentation(int k, int n, Mode mode)
{
    if (k < 1 || k > n) throw invalid_input("verify_presentation needs 1 <= k <= n");
    if (mode == Mode::infinite) throw invalid_input("verify_presentation needs a classical or quantum mode");
    const GrassmannContext ctx(k, n, mode);
    const KVector fund = KVector::fundamental(k);
    const KVector zero(k);

    PresentationReport report;
    report.k = k;
    report.n = n;
    report.mode = mode;

    const int last_vanishing = mode == Mode::classical ? k : k - 1;
    for (int i = 1; i <= last_vanishing; ++i) {
        const int h = n - k + i;
        auto r = detail::action_check("D" + std::to_string(h), DPolynomial::generator(h), ctx, zero);
        r.polynomial = to_string(generator_in(h, k)) + " = 0";
        report.checked_relations.push_back(std::move(r));
    }
    if (mode == Mode::quantum) {
        const QInt expected_q = ctx.wrap_factor();
        auto r = detail::action_check("D" + std::to_string(n), DPolynomial::generator(n), ctx, fund * expected_q);
        r.polynomial = to_string(generator_in(n, k)) + " = " + to_string(expected_q);
        report.checked_relations.push_back(std::move(r));
    }

    if (k < n) {
        const auto y = y_polynomials(n, k);
        const int last_y = mode == Mode::classical ? n : n - 1;
        for (int i = k + 1; i <= last_y; ++i) {
            auto r = detail::action_check("Y" + std::to_string(i), y[static_cast<std::size_t>(i)], ctx, zero);
            r.polynomial = to_string(y[static_cast<std::size_t>(i)]) + " = 0";
            report.checked_relations.push_back(std::move(r));
        }
        if (mode == Mode::quantum && k + 1 <= n) {
            const QInt expected_q = (n - k - 1) % 2 == 0 ? QInt::q() : -QInt::q();
            auto r = detail::action_check("Y" + std::to_string(n), y[static_cast<std::size_t>(n)], ctx, fund * expected_q);
            r.polynomial = to_string(y[static_cast<std::size_t>(n)]) + " = " + to_string(expected_q);
            report.checked_relations.push_back(std::move(r));
        }

        const auto e = inverse_components(n);
        for (int j = 1; j <= k; ++j) {
            const int m = n - k + j;
            const Integer sign_m = m % 2 == 0 ? 1 : -1;
            DPolynomial residual = e[static_cast<std::size_t>(m)] * sign_m + DPolynomial::generator(m) * sign_m
                                   - y[static_cast<std::size_t>(m)];
            DPolynomial masked;
            for (const auto& [lambda, c] : residual.terms()) {
                const bool in_ideal = std::any_of(lambda.parts().begin(), lambda.parts().end(),
                                                  [&](int p) { return p > n - k && p < m; });
                if (!in_ideal) masked.add(lambda, c);
            }
            RelationCheck r;
            r.name = "E" + std::to_string(m) + " identity";
            r.polynomial = "(-1)^" + std::to_string(m) + " E" + std::to_string(m) + " = (-1)^" + std::to_string(m - 1) + " D"
                           + std::to_string(m) + " + Y" + std::to_string(m);
            // D_1..D_m act faithfully on the m-th exterior power, so the
            // witness is nonzero exactly when the masked residual is.
            r.witness = apply_operator(masked, KVector::fundamental(m));
            r.holds = masked.is_zero();
            report.checked_relations.push_back(std::move(r));
        }
    }
    return report;
}

} // namespace schubert
