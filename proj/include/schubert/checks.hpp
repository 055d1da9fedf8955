#pragma once

// Oracle and property suites over one Grassmannian G(k, n). Each suite
// compares two independent computations and reports the first disagreement.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "schubert/grassmann_contexts.hpp"
#include "schubert/pluecker.hpp"
#include "schubert/schur_oracle.hpp"

namespace schubert::checks {

struct Outcome {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string detail;  // first failure, empty when passed

    explicit Outcome(std::string n) : name(std::move(n)) {}

    void fail(std::string what)
    {
        if (passed) detail = std::move(what);
        passed = false;
    }
};

/// Symbols of length k with every index at most max_index.
inline std::vector<SchubertSymbol> symbols_bounded(int k, int max_index)
{
    if (k > max_index) return {};
    return symbols_in_range(k, max_index);
}

/// Pieri enumeration against Leibniz expansion on every basis vector with
/// indices <= max_index, for h <= max_h.
inline Outcome pieri_vs_leibniz(int k, int max_index, int max_h)
{
    Outcome out{"pieri_D == leibniz_D (k=" + std::to_string(k) + ")"};
    for (const auto& sym : symbols_bounded(k, max_index)) {
        const KVector v = KVector::basis(sym);
        for (int h = 0; h <= max_h; ++h, ++out.cases)
            if (pieri_D(h, v) != leibniz_D(h, v)) out.fail("h=" + std::to_string(h) + " on " + to_string(v));
    }
    return out;
}

inline Outcome derivations_commute(int k, int max_index, int max_h)
{
    Outcome out{"D_i D_j == D_j D_i (k=" + std::to_string(k) + ")"};
    for (const auto& sym : symbols_bounded(k, max_index)) {
        const KVector v = KVector::basis(sym);
        for (int i = 1; i <= max_h; ++i)
            for (int j = i + 1; j <= max_h; ++j, ++out.cases)
                if (pieri_D(i, pieri_D(j, v)) != pieri_D(j, pieri_D(i, v)))
                    out.fail("i=" + std::to_string(i) + " j=" + std::to_string(j) + " on " + to_string(v));
    }
    return out;
}

/// Giambelli operators send e^1 ^ ... ^ e^k to e^{I(lambda)}.
inline Outcome giambelli(int k, int cols)
{
    Outcome out{"Giambelli on the " + std::to_string(k) + "x" + std::to_string(cols) + " box"};
    const KVector fund = KVector::fundamental(k);
    for (const auto& lambda : partitions_in_box(k, cols)) {
        ++out.cases;
        if (apply_operator(giambelli_det(lambda, k), fund) != KVector::basis(partition_to_symbol(lambda, k)))
            out.fail("lambda=" + to_string(lambda));
    }
    return out;
}

/// E_h annihilates the k-th exterior power for h > k.
inline Outcome inverse_vanishing(int k, int max_weight, int max_h)
{
    Outcome out{"E_h = 0 on degree " + std::to_string(k) + " for h > k"};
    const auto e = inverse_components(max_h);
    for (const auto& sym : symbols_up_to_weight(k, max_weight)) {
        const KVector v = KVector::basis(sym);
        for (int h = k + 1; h <= max_h; ++h, ++out.cases)
            if (!apply_operator(e[static_cast<std::size_t>(h)], v).is_zero())
                out.fail("E" + std::to_string(h) + " on " + to_string(v));
    }
    return out;
}

/// reduce_generator(h, k) acts like D_h.
inline Outcome generator_reduction(int k, int max_weight, int max_h)
{
    Outcome out{"reduced D_h acts as D_h (k=" + std::to_string(k) + ")"};
    for (int h = k + 1; h <= max_h; ++h) {
        const DPolynomial reduced = reduce_generator(h, k);
        if (reduced.max_generator() > k) out.fail("D" + std::to_string(h) + " not in D_1..D_k");
        if (reduced.homogeneous_degree() != h) out.fail("D" + std::to_string(h) + " not homogeneous of degree h");
        for (const auto& sym : symbols_up_to_weight(k, max_weight)) {
            ++out.cases;
            const KVector v = KVector::basis(sym);
            if (apply_operator(reduced, v) != pieri_D(h, v)) out.fail("D" + std::to_string(h) + " on " + to_string(v));
        }
    }
    return out;
}

inline Outcome presentation(int k, int n, Mode mode)
{
    Outcome out{to_string(mode) + " presentation of G(" + std::to_string(k) + "," + std::to_string(n) + ")"};
    const auto report = verify_presentation(k, n, mode);
    for (const auto& r : report.checked_relations) {
        ++out.cases;
        if (!r.holds) out.fail(r.name + ": residual " + to_string(r.witness));
    }
    return out;
}

/// quantum_pieri against reduce(pieri_D(h, .)) on every box symbol.
inline Outcome quantum_pieri_oracle(int k, int n)
{
    Outcome out{"quantum Pieri == wrap(pieri_D) on G(" + std::to_string(k) + "," + std::to_string(n) + ")"};
    const auto ctx = GrassmannContext::quantum(k, n);
    for (const auto& sym : symbols_in_range(k, n)) {
        const KVector v = KVector::basis(sym);
        for (int h = 1; h <= n - k; ++h, ++out.cases)
            if (quantum_pieri(h, v, ctx) != reduce(pieri_D(h, v), ctx))
                out.fail("h=" + std::to_string(h) + " on " + to_string(v));
    }
    return out;
}

/// Classical products against Littlewood-Richardson coefficients from
/// Schur polynomials, restricted to the box.
inline Outcome lr_agreement(int k, int n)
{
    Outcome out{"classical products == Schur oracle on G(" + std::to_string(k) + "," + std::to_string(n) + ")"};
    const auto ctx = GrassmannContext::classical(k, n);
    const auto box = partitions_in_box(k, n - k);
    for (const auto& lambda : box) {
        for (const auto& mu : box) {
            const auto product = multiply(lambda, mu, ctx);
            for (const auto& nu : box) {
                ++out.cases;
                const auto it = product.find({nu, 0u});
                const Integer got = it == product.end() ? Integer(0) : it->second;
                if (got != lr_coefficient(lambda, mu, nu, k))
                    out.fail(to_string(lambda) + "*" + to_string(mu) + " at " + to_string(nu));
            }
            for (const auto& [key, c] : product)
                if (key.second != 0 || !key.first.fits_box(k, n - k)) out.fail("term outside the classical box");
        }
    }
    return out;
}

inline SchubertElement special_class(int a) { return schubert_class(Partition{a}); }

/// (s_a * s_b) * s_c == s_a * (s_b * s_c) for all special classes.
inline Outcome quantum_associativity(int k, int n)
{
    Outcome out{"quantum associativity on G(" + std::to_string(k) + "," + std::to_string(n) + ")"};
    const auto ctx = GrassmannContext::quantum(k, n);
    for (int a = 1; a <= n - k; ++a)
        for (int b = 1; b <= n - k; ++b)
            for (int c = 1; c <= n - k; ++c) {
                ++out.cases;
                const auto left = multiply(multiply(special_class(a), special_class(b), ctx), special_class(c), ctx);
                const auto right = multiply(special_class(a), multiply(special_class(b), special_class(c), ctx), ctx);
                if (left != right) out.fail("a=" + std::to_string(a) + " b=" + std::to_string(b) + " c=" + std::to_string(c));
            }
    return out;
}

/// Giambelli in the quantum quotient carries no q-correction.
inline Outcome quantum_giambelli(int k, int n)
{
    Outcome out{"quantum Giambelli on G(" + std::to_string(k) + "," + std::to_string(n) + ")"};
    const auto ctx = GrassmannContext::quantum(k, n);
    const KVector fund = KVector::fundamental(k);
    for (const auto& lambda : partitions_in_box(k, n - k)) {
        ++out.cases;
        const KVector got = apply_in_context(reduce_generators(giambelli_det(lambda, k), k), fund, ctx);
        if (got != KVector::basis(partition_to_symbol(lambda, k))) out.fail("lambda=" + to_string(lambda) + " gave " + to_string(got));
    }
    return out;
}

inline Outcome jacobi_trudi(int k, int cols)
{
    Outcome out{"Jacobi-Trudi on the " + std::to_string(k) + "x" + std::to_string(cols) + " box"};
    for (const auto& lambda : partitions_in_box(k, cols)) {
        ++out.cases;
        if (!verify_jacobi_trudi(lambda, k)) out.fail("lambda=" + to_string(lambda));
    }
    return out;
}

/// Positivity, degree balance, commutativity and q = 0 specialization of
/// the quantum structure table.
inline Outcome table_invariants(int k, int n)
{
    Outcome out{"structure table invariants on G(" + std::to_string(k) + "," + std::to_string(n) + ")"};
    const auto quantum = structure_table(GrassmannContext::quantum(k, n));
    const auto classical = structure_table(GrassmannContext::classical(k, n));
    for (const auto& [pair, product] : quantum.entries) {
        ++out.cases;
        const auto& [lambda, mu] = pair;
        for (const auto& [key, c] : product) {
            if (c < 0) out.fail("negative coefficient in " + to_string(lambda) + "*" + to_string(mu));
            if (key.first.weight() != lambda.weight() + mu.weight() - n * static_cast<int>(key.second))
                out.fail("degree imbalance in " + to_string(lambda) + "*" + to_string(mu));
        }
        if (product != quantum.entries.at({mu, lambda})) out.fail("not commutative at " + to_string(lambda) + "*" + to_string(mu));
        if (classical_part(product) != classical.entries.at(pair))
            out.fail("q=0 specialization differs at " + to_string(lambda) + "*" + to_string(mu));
    }
    return out;
}

/// <lambda, mu> = 1 exactly for complementary pairs of top total weight.
inline Outcome poincare_duality(int k, int n)
{
    Outcome out{"Poincare duality on G(" + std::to_string(k) + "," + std::to_string(n) + ")"};
    const auto ctx = GrassmannContext::classical(k, n);
    const auto box = partitions_in_box(k, n - k);
    for (const auto& lambda : box)
        for (const auto& mu : box) {
            if (lambda.weight() + mu.weight() != k * (n - k)) continue;
            ++out.cases;
            const Integer expected = mu == lambda.box_complement(k, n - k) ? 1 : 0;
            if (poincare_pair(lambda, mu, ctx) != expected) out.fail(to_string(lambda) + "," + to_string(mu));
        }
    return out;
}

/// The degree-d monomials in D_1..D_k, applied to e^1 ^ ... ^ e^k, form a
/// square integer matrix in the weight-d basis. Its determinant is +-1, so
/// the monomials act independently and the Giambelli operators (which map
/// to the basis itself) span the same lattice.
inline Outcome operator_independence(int k, int max_degree)
{
    Outcome out{"D-monomials vs Giambelli basis (k=" + std::to_string(k) + ")"};
    const KVector fund = KVector::fundamental(k);
    for (int d = 0; d <= max_degree; ++d, ++out.cases) {
        const auto monomials = partitions_of(d, d, k);  // parts <= k
        const auto targets = partitions_of(d, k, d);    // at most k parts
        if (monomials.size() != targets.size()) {
            out.fail("degree " + std::to_string(d) + ": basis sizes differ");
            continue;
        }
        const int size = static_cast<int>(targets.size());
        IntegerMatrix m(size, size);
        for (int c = 0; c < size; ++c) {
            const KVector image = apply_operator(DPolynomial::monomial(monomials[static_cast<std::size_t>(c)]), fund);
            for (int r = 0; r < size; ++r)
                m.at(r, c) = image.coefficient(partition_to_symbol(targets[static_cast<std::size_t>(r)], k)).constant_term();
        }
        const Integer det = m.determinant();
        if (det != 1 && det != -1) out.fail("degree " + std::to_string(d) + ": determinant " + det.str());
        for (const auto& lambda : targets)
            if (apply_operator(giambelli_det(lambda, k), fund) != KVector::basis(partition_to_symbol(lambda, k)))
                out.fail("Giambelli operator of " + to_string(lambda) + " is not a basis vector");
    }
    return out;
}

/// Giambelli operators of partitions sticking out of the box reduce to
/// zero on the classical quotient.
inline Outcome ideal_membership(int k, int n)
{
    Outcome out{"classes outside the box vanish on G(" + std::to_string(k) + "," + std::to_string(n) + ")"};
    const auto ctx = GrassmannContext::classical(k, n);
    const KVector fund = KVector::fundamental(k);
    for (const auto& lambda : partitions_in_box(k, n - k + 2)) {
        if (lambda.fits_box(k, n - k)) continue;
        ++out.cases;
        if (!apply_in_context(reduce_generators(giambelli_det(lambda, k), k), fund, ctx).is_zero())
            out.fail("lambda=" + to_string(lambda));
    }
    return out;
}

/// Everything above for one Grassmannian.
inline std::vector<Outcome> run_all(int k, int n)
{
    std::vector<Outcome> out;
    const int max_index = std::max(n, k + 4);
    out.push_back(pieri_vs_leibniz(k, max_index, n));
    out.push_back(derivations_commute(k, max_index, std::min(n, 6)));
    out.push_back(giambelli(k, n - k));
    out.push_back(inverse_vanishing(k, 8, k + 4));
    out.push_back(generator_reduction(k, 8, k + 4));
    out.push_back(presentation(k, n, Mode::classical));
    out.push_back(presentation(k, n, Mode::quantum));
    out.push_back(operator_independence(k, 5));
    if (n > k) {
        out.push_back(quantum_pieri_oracle(k, n));
        out.push_back(lr_agreement(k, n));
        out.push_back(quantum_associativity(k, n));
        out.push_back(quantum_giambelli(k, n));
        out.push_back(jacobi_trudi(k, n - k));
        out.push_back(table_invariants(k, n));
        out.push_back(poincare_duality(k, n));
        out.push_back(ideal_membership(k, n));
    }
    return out;
}

} // namespace schubert::checks
