#pragma once

// Finite-rank quotients of the exterior power: the classical one, where every
// e^i with i > n is zero, and the quantum one, where e^{n+i} wraps back to
// e^i picking up a factor (-1)^{k-1} q.

#include <functional>
#include <string>
#include <string_view>

#include "schubert/derivations.hpp"

namespace schubert {

enum class Mode { infinite, classical, quantum };

inline std::string to_string(Mode m)
{
    switch (m) {
    case Mode::infinite: return "infinite";
    case Mode::classical: return "classical";
    case Mode::quantum: return "quantum";
    }
    return "?";
}

inline Mode parse_mode(std::string_view s)
{
    if (s == "infinite") return Mode::infinite;
    if (s == "classical") return Mode::classical;
    if (s == "quantum") return Mode::quantum;
    throw invalid_input("unknown mode: " + std::string(s));
}

struct GrassmannContext {
    int k = 1;
    int n = 1;
    Mode mode = Mode::classical;

    GrassmannContext(int k_, int n_, Mode mode_) : k(k_), n(n_), mode(mode_)
    {
        if (k < 1 || k > n) throw invalid_input("context needs 1 <= k <= n");
    }

    static GrassmannContext classical(int k, int n) { return {k, n, Mode::classical}; }
    static GrassmannContext quantum(int k, int n) { return {k, n, Mode::quantum}; }

    /// Number of columns of the Schubert box.
    int box_cols() const noexcept { return n - k; }

    bool in_box(const Partition& p) const
    {
        if (mode == Mode::infinite) return p.length() <= k;
        return p.fits_box(k, n - k);
    }

    /// (-1)^{k-1} q
    QInt wrap_factor() const { return k % 2 == 1 ? QInt::q() : -QInt::q(); }

    bool operator==(const GrassmannContext&) const = default;
};

/// Image of v in the context's quotient.
inline KVector reduce(const KVector& v, const GrassmannContext& ctx)
{
    if (v.degree() != ctx.k) throw invalid_input("k-vector degree does not match the context");
    if (ctx.mode == Mode::infinite) return v;

    KVector out(v.degree());
    if (ctx.mode == Mode::classical) {
        for (const auto& [sym, c] : v.terms())
            if (sym.max_index() <= ctx.n) out.add(sym, c);
        return out;
    }

    const QInt wrap = ctx.wrap_factor();
    std::vector<int> idx;
    for (const auto& [sym, c] : v.terms()) {
        idx = sym.indices();
        QInt coeff = c;
        bool vanished = false;
        while (!idx.empty() && idx.back() > ctx.n) {
            idx.back() -= ctx.n;
            coeff *= wrap;
            const int sign = sort_with_sign(idx);
            if (sign == 0) {
                vanished = true;
                break;
            }
            if (sign < 0) coeff = -coeff;
        }
        if (!vanished) out.add(SchubertSymbol::from_sorted(idx), coeff);
    }
    return out;
}

/// D_h on the quantum quotient, enumerating surviving terms directly: the
/// classical Pieri terms with j_k <= n, plus q times every e^{J'} with
/// 1 <= j'_1 < i_1 <= j'_2 < i_2 <= ... <= j'_k < i_k, |J'| = |I| + h - n.
inline KVector quantum_pieri(int h, const KVector& v, const GrassmannContext& ctx)
{
    if (ctx.mode != Mode::quantum) throw invalid_input("quantum_pieri needs a quantum context");
    if (v.degree() != ctx.k) throw invalid_input("k-vector degree does not match the context");
    if (h < 1 || h > ctx.n - ctx.k) throw invalid_input("quantum Pieri index must lie in [1, n-k]");
    const int k = ctx.k;
    const int n = ctx.n;
    for (const auto& [sym, c] : v.terms())
        if (sym.max_index() > n) throw invalid_input("k-vector has an index above n");

    KVector out(k);
    const QInt q = QInt::q();
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (const auto& [sym, c] : v.terms()) {
        const auto& I = sym.indices();
        const auto last = static_cast<std::size_t>(k - 1);

        // classical part: i_p <= j_p < i_{p+1}, j_k <= n
        auto classical = [&](auto&& self, std::size_t p, int remaining) -> void {
            if (p == last) {
                idx[p] = I[p] + remaining;
                if (idx[p] <= n) out.add(SchubertSymbol::from_sorted(idx), c);
                return;
            }
            const int room = std::min(I[p + 1] - I[p] - 1, remaining);
            for (int s = 0; s <= room; ++s) {
                idx[p] = I[p] + s;
                self(self, p + 1, remaining - s);
            }
        };
        classical(classical, 0, h);

        // q part: j'_1 in [1, i_1), j'_p in [i_{p-1}, i_p) for p >= 2
        const int target = sym.index_sum() + h - n;
        const QInt qc = q * c;
        auto quantum = [&](auto&& self, std::size_t p, int sum) -> void {
            const int lo = p == 0 ? 1 : I[p - 1];
            const int hi = I[p] - 1;
            for (int j = lo; j <= hi; ++j) {
                idx[p] = j;
                if (p == last) {
                    if (sum + j == target) out.add(SchubertSymbol::from_sorted(idx), qc);
                } else {
                    self(self, p + 1, sum + j);
                }
            }
        };
        if (target >= k * (k + 1) / 2) quantum(quantum, 0, 0);
    }
    return out;
}

/// apply_operator followed by reduction, reducing after every factor so
/// intermediate vectors stay inside the quotient.
inline KVector apply_in_context(const DPolynomial& p, const KVector& v, const GrassmannContext& ctx)
{
    return apply_operator_with(p, reduce(v, ctx), [&ctx](int h, const KVector& w) { return reduce(pieri_D(h, w), ctx); });
}

} // namespace schubert
