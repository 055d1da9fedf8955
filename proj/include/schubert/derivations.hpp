#pragma once

// The Schubert derivation D_t = sum_i D_i t^i on the exterior algebra of M,
// where D_1 shifts e^i to e^{i+1} and D_i = D_1^i on M, and the commutative
// operator ring Z[D_1, D_2, ...] it generates.

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schubert/exterior_core.hpp"

namespace schubert {

/// Integer polynomial in the commuting operators D_1, D_2, ...  A monomial
/// D_{l_1} ... D_{l_m} is keyed by the partition (l_1 >= ... >= l_m); the
/// empty partition is the identity D_0.
class DPolynomial {
public:
    using TermMap = std::map<Partition, Integer>;

    DPolynomial() = default;

    static DPolynomial identity() { return monomial(Partition{}, 1); }

    static DPolynomial monomial(const Partition& lambda, Integer c = 1)
    {
        DPolynomial p;
        p.add(lambda, c);
        return p;
    }

    /// D_i, with D_0 = 1 and D_i = 0 for negative i.
    static DPolynomial generator(int i)
    {
        if (i < 0) return {};
        if (i == 0) return identity();
        return monomial(Partition{i});
    }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Integer coefficient(const Partition& lambda) const
    {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add(const Partition& lambda, const Integer& c)
    {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(lambda, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Largest operator index appearing (0 for constants and zero).
    int max_generator() const noexcept
    {
        int m = 0;
        for (const auto& [lambda, c] : terms_)
            if (!lambda.empty()) m = std::max(m, lambda.parts().front());
        return m;
    }

    /// Degree if homogeneous, -1 if inhomogeneous or zero.
    int homogeneous_degree() const noexcept
    {
        int d = -1;
        for (const auto& [lambda, c] : terms_) {
            if (d == -1)
                d = lambda.weight();
            else if (d != lambda.weight())
                return -1;
        }
        return d;
    }

    DPolynomial& operator+=(const DPolynomial& o)
    {
        for (const auto& [l, c] : o.terms_) add(l, c);
        return *this;
    }
    DPolynomial& operator-=(const DPolynomial& o)
    {
        for (const auto& [l, c] : o.terms_) add(l, -c);
        return *this;
    }
    DPolynomial& operator*=(const Integer& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [l, c] : terms_) c *= s;
        return *this;
    }

    friend DPolynomial operator+(DPolynomial a, const DPolynomial& b) { return a += b; }
    friend DPolynomial operator-(DPolynomial a, const DPolynomial& b) { return a -= b; }
    friend DPolynomial operator-(DPolynomial a) { return a *= Integer(-1); }
    friend DPolynomial operator*(DPolynomial a, const Integer& s) { return a *= s; }
    friend DPolynomial operator*(const Integer& s, DPolynomial a) { return a *= s; }

    friend DPolynomial operator*(const DPolynomial& a, const DPolynomial& b)
    {
        DPolynomial r;
        std::vector<int> parts;
        for (const auto& [la, ca] : a.terms_) {
            for (const auto& [lb, cb] : b.terms_) {
                parts = la.parts();
                parts.insert(parts.end(), lb.parts().begin(), lb.parts().end());
                std::sort(parts.begin(), parts.end(), std::greater<>());
                r.add(Partition(parts), ca * cb);
            }
        }
        return r;
    }
    DPolynomial& operator*=(const DPolynomial& o) { return *this = *this * o; }

    bool operator==(const DPolynomial&) const = default;

private:
    TermMap terms_;
};

/// Evaluates P in a commutative ring by sending D_i to gen(i).
template <class Ring, class Gen>
Ring evaluate(const DPolynomial& p, Gen&& gen, const Ring& one, const Ring& zero)
{
    std::map<int, Ring> cache;
    auto value_of = [&](int i) -> const Ring& {
        auto it = cache.find(i);
        if (it == cache.end()) it = cache.emplace(i, gen(i)).first;
        return it->second;
    };
    Ring total = zero;
    for (const auto& [lambda, c] : p.terms()) {
        Ring term = one;
        for (int part : lambda.parts()) term = term * value_of(part);
        total = total + term * c;
    }
    return total;
}

/// Replaces every D_i by the polynomial sub(i).
template <class Sub>
DPolynomial substitute(const DPolynomial& p, Sub&& sub)
{
    return evaluate<DPolynomial>(p, std::forward<Sub>(sub), DPolynomial::identity(), DPolynomial{});
}

/// D1*D2 - D3 style text; monomials ordered by their ascending factor lists.
inline std::string to_string(const DPolynomial& p)
{
    std::vector<std::pair<std::vector<int>, const Integer*>> ordered;
    for (const auto& [lambda, c] : p.terms()) {
        std::vector<int> asc(lambda.parts().rbegin(), lambda.parts().rend());
        ordered.emplace_back(std::move(asc), &c);
    }
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    std::string out;
    for (const auto& [factors, c] : ordered) {
        std::string mono;
        for (std::size_t i = 0; i < factors.size();) {
            std::size_t j = i;
            while (j < factors.size() && factors[j] == factors[i]) ++j;
            if (!mono.empty()) mono += '*';
            mono += 'D' + std::to_string(factors[i]);
            if (j - i > 1) mono += '^' + std::to_string(j - i);
            i = j;
        }
        detail::append_term(out, *c, 0, mono);
    }
    return out.empty() ? "0" : out;
}

/// The unnormalized wedge words of the generalized Leibniz rule, one per
/// distribution h = h_1 + ... + h_k and term of v, in enumeration order.
inline std::vector<RawTerm> leibniz_expansion(int h, const KVector& v)
{
    if (h < 0) throw invalid_input("derivation index must be nonnegative");
    const int k = v.degree();
    std::vector<RawTerm> raw;
    std::vector<int> shift(static_cast<std::size_t>(k), 0);
    for (const auto& [sym, c] : v.terms()) {
        auto rec = [&](auto&& self, int pos, int remaining) -> void {
            if (pos == k - 1) {
                shift[static_cast<std::size_t>(pos)] = remaining;
                std::vector<int> idx(sym.indices());
                for (int j = 0; j < k; ++j) idx[static_cast<std::size_t>(j)] += shift[static_cast<std::size_t>(j)];
                raw.push_back({std::move(idx), c});
                return;
            }
            for (int s = 0; s <= remaining; ++s) {
                shift[static_cast<std::size_t>(pos)] = s;
                self(self, pos + 1, remaining - s);
            }
        };
        if (k == 0) {
            if (h == 0) raw.push_back({{}, c});
        } else {
            rec(rec, 0, h);
        }
    }
    return raw;
}

/// D_h through the generalized Leibniz rule. Kept as the independent
/// oracle for pieri_D.
inline KVector leibniz_D(int h, const KVector& v)
{
    return normalize(v.degree(), leibniz_expansion(h, v));
}

/// D_h by the Pieri rule: e^I maps to the sum of e^J over
/// i_1 <= j_1 < i_2 <= j_2 < ... < i_k <= j_k with |J| = |I| + h.
inline KVector pieri_D(int h, const KVector& v)
{
    if (h < 0) throw invalid_input("derivation index must be nonnegative");
    if (h == 0) return v;
    const int k = v.degree();
    KVector out(k);
    if (k == 0) return out;
    std::vector<int> idx;
    for (const auto& [sym, c] : v.terms()) {
        const auto& I = sym.indices();
        idx = I;
        auto rec = [&](auto&& self, int pos, int remaining) -> void {
            const auto p = static_cast<std::size_t>(pos);
            if (pos == k - 1) {
                idx[p] = I[p] + remaining;
                out.add(SchubertSymbol::from_sorted(idx), c);
                return;
            }
            const int room = std::min(I[p + 1] - I[p] - 1, remaining);
            for (int s = 0; s <= room; ++s) {
                idx[p] = I[p] + s;
                self(self, pos + 1, remaining - s);
            }
            idx[p] = I[p];
        };
        rec(rec, 0, h);
    }
    return out;
}

/// E_0, ..., E_max with E_t = D_t^{-1}: E_0 = 1, E_m = -sum_{i=1}^m D_i E_{m-i}.
inline std::vector<DPolynomial> inverse_components(int max_degree)
{
    std::vector<DPolynomial> e;
    e.push_back(DPolynomial::identity());
    for (int m = 1; m <= max_degree; ++m) {
        DPolynomial em;
        for (int i = 1; i <= m; ++i) em -= DPolynomial::generator(i) * e[static_cast<std::size_t>(m - i)];
        e.push_back(std::move(em));
    }
    return e;
}

/// Evaluates P on v, computing each monomial D_{l_1} ... D_{l_m} by applying
/// step(l_1, .), then step(l_2, .), ... (largest index first). Shared
/// prefixes are computed once.
template <class Step>
KVector apply_operator_with(const DPolynomial& p, const KVector& v, Step&& step)
{
    KVector total(v.degree());
    std::map<std::vector<int>, KVector> prefix;
    prefix.emplace(std::vector<int>{}, v);
    for (const auto& [lambda, c] : p.terms()) {
        const auto& parts = lambda.parts();
        std::vector<int> key;
        const KVector* cur = &prefix.at(key);
        for (int part : parts) {
            key.push_back(part);
            auto it = prefix.find(key);
            if (it == prefix.end()) it = prefix.emplace(key, step(part, *cur)).first;
            cur = &it->second;
        }
        total += *cur * QInt(c);
    }
    return total;
}

inline KVector apply_operator(const DPolynomial& p, const KVector& v)
{
    return apply_operator_with(p, v, [](int h, const KVector& w) { return pieri_D(h, w); });
}

/// D_1 applied m times.
inline KVector iterated_D1(int m, const KVector& v)
{
    if (m < 0) throw invalid_input("iteration count must be nonnegative");
    KVector w = v;
    for (int i = 0; i < m; ++i) w = pieri_D(1, w);
    return w;
}

} // namespace schubert
