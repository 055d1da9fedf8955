#pragma once

// Schur polynomials in finitely many variables, built from semistandard
// Young tableaux. This is the independent check on classical products: it
// shares nothing with the derivation machinery except the Partition type
// (and giambelli_det, which verify_jacobi_trudi exists to test).

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>
#include <vector>

#include "schubert/giambelli_ring.hpp"

namespace schubert {

/// Integer polynomial in x_1..x_k, keyed by exponent vectors.
class MultiPolynomial {
public:
    using Exponent = std::vector<int>;

    explicit MultiPolynomial(int num_vars = 0) : num_vars_(num_vars) {}

    static MultiPolynomial constant(int num_vars, Integer c)
    {
        MultiPolynomial p(num_vars);
        p.add(Exponent(static_cast<std::size_t>(num_vars), 0), c);
        return p;
    }

    int num_vars() const noexcept { return num_vars_; }
    const std::map<Exponent, Integer>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Integer coefficient(const Exponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add(const Exponent& e, const Integer& c)
    {
        if (static_cast<int>(e.size()) != num_vars_) throw invalid_input("exponent vector has wrong length");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    MultiPolynomial& operator+=(const MultiPolynomial& o)
    {
        check(o);
        for (const auto& [e, c] : o.terms_) add(e, c);
        return *this;
    }
    MultiPolynomial& operator-=(const MultiPolynomial& o)
    {
        check(o);
        for (const auto& [e, c] : o.terms_) add(e, -c);
        return *this;
    }
    friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
    friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }
    friend MultiPolynomial operator*(MultiPolynomial a, const Integer& s)
    {
        if (s == 0) return MultiPolynomial(a.num_vars_);
        for (auto& [e, c] : a.terms_) c *= s;
        return a;
    }
    friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b)
    {
        a.check(b);
        MultiPolynomial r(a.num_vars_);
        Exponent sum(static_cast<std::size_t>(a.num_vars_));
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
                r.add(sum, ca * cb);
            }
        }
        return r;
    }

    bool operator==(const MultiPolynomial&) const = default;

    /// Invariant under every transposition of adjacent variables.
    bool is_symmetric() const
    {
        for (int i = 0; i + 1 < num_vars_; ++i) {
            for (const auto& [e, c] : terms_) {
                Exponent swapped = e;
                std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(i + 1)]);
                if (coefficient(swapped) != c) return false;
            }
        }
        return true;
    }

private:
    void check(const MultiPolynomial& o) const
    {
        if (o.num_vars_ != num_vars_) throw invalid_input("polynomials in different numbers of variables");
    }

    int num_vars_;
    std::map<Exponent, Integer> terms_;
};

namespace detail {

// Fills the diagram row by row: rows weakly increase, columns strictly
// increase, entries in 1..k. Each filling contributes x^{content}.
inline MultiPolynomial enumerate_ssyt(const Partition& lambda, int k)
{
    MultiPolynomial out(k);
    const auto& shape = lambda.parts();
    std::vector<std::vector<int>> tableau(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r) tableau[r].assign(static_cast<std::size_t>(shape[r]), 0);
    std::vector<int> content(static_cast<std::size_t>(k), 0);

    auto rec = [&](auto&& self, std::size_t row, std::size_t col) -> void {
        if (row == shape.size()) {
            out.add(content, 1);
            return;
        }
        if (col == static_cast<std::size_t>(shape[row])) {
            self(self, row + 1, 0);
            return;
        }
        int lo = 1;
        if (col > 0) lo = std::max(lo, tableau[row][col - 1]);
        if (row > 0) lo = std::max(lo, tableau[row - 1][col] + 1);
        // leave room for the strictly increasing cells below in this column
        int below = 0;
        for (std::size_t r = row + 1; r < shape.size() && shape[r] > static_cast<int>(col); ++r) ++below;
        const int hi = k - below;
        for (int v = lo; v <= hi; ++v) {
            tableau[row][col] = v;
            ++content[static_cast<std::size_t>(v - 1)];
            self(self, row, col + 1);
            --content[static_cast<std::size_t>(v - 1)];
        }
    };
    if (lambda.length() <= k) rec(rec, 0, 0);
    return out;
}

} // namespace detail

/// s_lambda(x_1, ..., x_k); zero when lambda has more than k parts.
inline MultiPolynomial schur_expand(const Partition& lambda, int k)
{
    if (k < 1) throw invalid_input("need at least one variable");
    static std::mutex mutex;
    static std::map<std::pair<Partition, int>, MultiPolynomial> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find({lambda, k});
        if (it != cache.end()) return it->second;
    }
    MultiPolynomial p = detail::enumerate_ssyt(lambda, k);
    std::lock_guard lock(mutex);
    cache.try_emplace({lambda, k}, p);
    return p;
}

/// The unique expansion p = sum c_lambda s_lambda, peeling off the Schur
/// polynomial of the lexicographically largest exponent vector each round.
inline std::map<Partition, Integer> schur_decompose(const MultiPolynomial& p)
{
    std::map<Partition, Integer> out;
    MultiPolynomial rest = p;
    while (!rest.is_zero()) {
        const auto& [lead, c] = *rest.terms().rbegin();
        if (!std::is_sorted(lead.begin(), lead.end(), std::greater<>()))
            throw invalid_input("polynomial is not symmetric");
        const Partition lambda(lead);
        const Integer coeff = c;
        out.emplace(lambda, coeff);
        rest -= schur_expand(lambda, p.num_vars()) * coeff;
    }
    return out;
}

/// Coefficient of s_nu in s_lambda * s_mu over k variables.
inline Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu, int k)
{
    if (lambda.length() > k || mu.length() > k || nu.length() > k) throw invalid_input("partition has more than k parts");
    if (nu.weight() != lambda.weight() + mu.weight()) return 0;
    static std::mutex mutex;
    static std::map<std::tuple<Partition, Partition, int>, std::map<Partition, Integer>> cache;
    const auto key = std::make_tuple(lambda, mu, k);
    std::map<Partition, Integer> decomposition;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) decomposition = it->second;
    }
    if (decomposition.empty()) {
        decomposition = schur_decompose(schur_expand(lambda, k) * schur_expand(mu, k));
        std::lock_guard lock(mutex);
        cache.try_emplace(key, decomposition);
    }
    auto it = decomposition.find(nu);
    return it == decomposition.end() ? Integer(0) : it->second;
}

/// h_d(x_1, ..., x_k)
inline MultiPolynomial complete_homogeneous(int d, int k)
{
    MultiPolynomial out(k);
    if (d < 0) return out;
    std::vector<int> e(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == k - 1) {
            e[static_cast<std::size_t>(var)] = remaining;
            out.add(e, 1);
            return;
        }
        for (int a = remaining; a >= 0; --a) {
            e[static_cast<std::size_t>(var)] = a;
            self(self, var + 1, remaining - a);
        }
    };
    rec(rec, 0, d);
    return out;
}

/// giambelli_det(lambda, k) with D_i -> h_i(x_1..x_k) equals s_lambda(x_1..x_k).
inline bool verify_jacobi_trudi(const Partition& lambda, int k)
{
    const DPolynomial det = giambelli_det(lambda, k);
    const MultiPolynomial lhs = evaluate<MultiPolynomial>(
        det, [k](int i) { return complete_homogeneous(i, k); }, MultiPolynomial::constant(k, 1), MultiPolynomial(k));
    return lhs == schur_expand(lambda, k);
}

} // namespace schubert
