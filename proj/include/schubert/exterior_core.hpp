#pragma once

// Partitions, Schubert symbols and the exterior powers of the free module
// M = Z<e^1, e^2, ...> with coefficients in Z[q].

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schubert/integer.hpp"

namespace schubert {

/// Weakly decreasing sequence of positive integers. Trailing zeros passed to
/// the constructor are dropped, so the empty partition is the only zero.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw invalid_input("partition parts must be nonnegative and weakly decreasing");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw invalid_input("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    int weight() const noexcept
    {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }

    /// lambda_i with 1-based i; zero past the length.
    int part(int i) const noexcept
    {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    /// r_i = lambda_{k+1-i}: parts read from the bottom of a k-row diagram.
    int part_from_bottom(int i, int k) const noexcept { return part(k + 1 - i); }

    /// Fits in the rows x cols rectangle.
    bool fits_box(int rows, int cols) const noexcept
    {
        return length() <= rows && (empty() || parts_.front() <= cols);
    }

    /// Complement inside the rows x cols rectangle.
    Partition box_complement(int rows, int cols) const
    {
        if (!fits_box(rows, cols)) throw invalid_input("partition does not fit the box");
        std::vector<int> c(static_cast<std::size_t>(rows));
        for (int i = 1; i <= rows; ++i) c[static_cast<std::size_t>(i - 1)] = cols - part(rows + 1 - i);
        return Partition(std::move(c));
    }

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// All partitions fitting in rows x cols, in lexicographic order of parts.
inline std::vector<Partition> partitions_in_box(int rows, int cols)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int max_part) -> void {
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == rows) return;
        for (int p = 1; p <= max_part; ++p) {
            cur.push_back(p);
            self(self, p);
            cur.pop_back();
        }
    };
    rec(rec, cols);
    std::sort(out.begin(), out.end());
    return out;
}

/// Partitions of `weight` with at most `max_length` parts, each at most `max_part`.
inline std::vector<Partition> partitions_of(int weight, int max_length, int max_part)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_length) return;
        for (int p = std::min(cap, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    if (weight >= 0) rec(rec, weight, max_part);
    std::sort(out.begin(), out.end());
    return out;
}

/// Strictly increasing sequence of positive integers (i_1 < ... < i_k),
/// naming the basis k-vector e^{i_1} ^ ... ^ e^{i_k}.
class SchubertSymbol {
public:
    SchubertSymbol() = default;

    explicit SchubertSymbol(std::vector<int> indices) : indices_(std::move(indices))
    {
        for (std::size_t j = 0; j < indices_.size(); ++j) {
            if (indices_[j] < 1) throw invalid_input("symbol indices must be >= 1");
            if (j > 0 && indices_[j] <= indices_[j - 1])
                throw invalid_input("symbol indices must be strictly increasing");
        }
    }

    SchubertSymbol(std::initializer_list<int> indices) : SchubertSymbol(std::vector<int>(indices)) {}

    const std::vector<int>& indices() const noexcept { return indices_; }
    int size() const noexcept { return static_cast<int>(indices_.size()); }
    int operator[](std::size_t j) const noexcept { return indices_[j]; }

    int index_sum() const noexcept
    {
        int s = 0;
        for (int i : indices_) s += i;
        return s;
    }

    /// sum_j (i_j - j) = |I| - k(k+1)/2
    int weight() const noexcept
    {
        const int k = size();
        return index_sum() - k * (k + 1) / 2;
    }

    int max_index() const noexcept { return indices_.empty() ? 0 : indices_.back(); }

    auto operator<=>(const SchubertSymbol&) const = default;
    bool operator==(const SchubertSymbol&) const = default;

    // Skips validation; callers guarantee the invariant.
    static SchubertSymbol from_sorted(std::vector<int> indices)
    {
        SchubertSymbol s;
        s.indices_ = std::move(indices);
        return s;
    }

private:
    std::vector<int> indices_;
};

/// The symbol (1, 2, ..., k).
inline SchubertSymbol fundamental_symbol(int k)
{
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) idx[static_cast<std::size_t>(j)] = j + 1;
    return SchubertSymbol::from_sorted(std::move(idx));
}

/// i_j = r_j + j with r_j = lambda_{k+1-j}.
inline SchubertSymbol partition_to_symbol(const Partition& lambda, int k)
{
    if (k < 1) throw invalid_input("k must be positive");
    if (lambda.length() > k) throw invalid_input("partition has more than k parts");
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) idx[static_cast<std::size_t>(j - 1)] = lambda.part_from_bottom(j, k) + j;
    return SchubertSymbol::from_sorted(std::move(idx));
}

inline Partition symbol_to_partition(const SchubertSymbol& sym)
{
    const int k = sym.size();
    std::vector<int> parts(static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) parts[static_cast<std::size_t>(k - j)] = sym[static_cast<std::size_t>(j - 1)] - j;
    return Partition(std::move(parts));
}

/// Integer polynomial in one variable q. No zero coefficient is stored.
class QInt {
public:
    QInt() = default;
    QInt(Integer c) { if (c != 0) coeffs_.emplace(0u, std::move(c)); }
    QInt(long long c) : QInt(Integer(c)) {}
    QInt(int c) : QInt(Integer(c)) {}

    static QInt monomial(Integer c, unsigned q_degree)
    {
        QInt r;
        if (c != 0) r.coeffs_.emplace(q_degree, std::move(c));
        return r;
    }
    static QInt q(unsigned power = 1) { return monomial(1, power); }

    const std::map<unsigned, Integer>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    Integer coefficient(unsigned d) const
    {
        auto it = coeffs_.find(d);
        return it == coeffs_.end() ? Integer(0) : it->second;
    }

    /// Value at q = 0.
    Integer constant_term() const { return coefficient(0); }

    QInt& operator+=(const QInt& o)
    {
        for (const auto& [d, c] : o.coeffs_) add_monomial(d, c);
        return *this;
    }
    QInt& operator-=(const QInt& o)
    {
        for (const auto& [d, c] : o.coeffs_) add_monomial(d, -c);
        return *this;
    }
    QInt& operator*=(const QInt& o) { return *this = *this * o; }

    friend QInt operator+(QInt a, const QInt& b) { return a += b; }
    friend QInt operator-(QInt a, const QInt& b) { return a -= b; }
    friend QInt operator-(QInt a)
    {
        for (auto& [d, c] : a.coeffs_) c = -c;
        return a;
    }
    friend QInt operator*(const QInt& a, const QInt& b)
    {
        QInt r;
        for (const auto& [da, ca] : a.coeffs_)
            for (const auto& [db, cb] : b.coeffs_) r.add_monomial(da + db, ca * cb);
        return r;
    }

    bool operator==(const QInt&) const = default;

    void add_monomial(unsigned d, const Integer& c)
    {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.try_emplace(d, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

private:
    std::map<unsigned, Integer> coeffs_;
};

/// Element of the k-th exterior power: a finite Z[q]-combination of basis
/// k-vectors. The degree is carried separately so the zero of each exterior
/// power is distinct.
class KVector {
public:
    using TermMap = std::map<SchubertSymbol, QInt>;

    explicit KVector(int degree = 0) : degree_(degree)
    {
        if (degree < 0) throw invalid_input("negative exterior degree");
    }

    static KVector basis(const SchubertSymbol& sym, QInt coeff = 1)
    {
        KVector v(sym.size());
        v.add(sym, coeff);
        return v;
    }

    /// e^1 ^ ... ^ e^k
    static KVector fundamental(int k) { return basis(fundamental_symbol(k)); }

    int degree() const noexcept { return degree_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    QInt coefficient(const SchubertSymbol& sym) const
    {
        auto it = terms_.find(sym);
        return it == terms_.end() ? QInt() : it->second;
    }

    /// Adds coeff * e^sym; sym must have length degree().
    void add(const SchubertSymbol& sym, const QInt& coeff)
    {
        if (sym.size() != degree_) throw invalid_input("symbol length does not match k-vector degree");
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(sym, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    KVector& operator+=(const KVector& o)
    {
        check_degree(o);
        for (const auto& [s, c] : o.terms_) add(s, c);
        return *this;
    }
    KVector& operator-=(const KVector& o)
    {
        check_degree(o);
        for (const auto& [s, c] : o.terms_) add(s, -c);
        return *this;
    }
    KVector& operator*=(const QInt& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second = it->second * s;
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
        }
        return *this;
    }

    friend KVector operator+(KVector a, const KVector& b) { return a += b; }
    friend KVector operator-(KVector a, const KVector& b) { return a -= b; }
    friend KVector operator-(KVector a) { return a *= QInt(-1); }
    friend KVector operator*(KVector a, const QInt& s) { return a *= s; }
    friend KVector operator*(const QInt& s, KVector a) { return a *= s; }

    bool operator==(const KVector&) const = default;

    /// Lowest and highest q-exponent among all coefficients (0 for zero).
    unsigned max_q_degree() const
    {
        unsigned d = 0;
        for (const auto& [s, c] : terms_)
            if (!c.is_zero()) d = std::max(d, c.coefficients().rbegin()->first);
        return d;
    }

private:
    void check_degree(const KVector& o) const
    {
        if (o.degree_ != degree_) throw invalid_input("k-vector degree mismatch");
    }

    int degree_ = 0;
    TermMap terms_;
};

/// Sorts `idx` ascending and returns the sign of the sorting permutation,
/// or 0 when an index repeats.
inline int sort_with_sign(std::vector<int>& idx)
{
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        const int x = idx[i];
        std::size_t j = i;
        while (j > 0 && idx[j - 1] > x) {
            idx[j] = idx[j - 1];
            --j;
            sign = -sign;
        }
        idx[j] = x;
        if (j > 0 && idx[j - 1] == x) return 0;
    }
    return sign;
}

struct RawTerm {
    std::vector<int> indices;
    QInt coefficient;
};

/// Brings wedge words into canonical form: repeated factors vanish, the
/// rest is sorted with the permutation sign and like terms are merged.
inline KVector normalize(int degree, std::span<const RawTerm> raw)
{
    KVector out(degree);
    for (const auto& t : raw) {
        if (static_cast<int>(t.indices.size()) != degree) throw invalid_input("raw term length differs from degree");
        for (int i : t.indices)
            if (i < 1) throw invalid_input("wedge index must be >= 1");
        std::vector<int> idx = t.indices;
        const int sign = sort_with_sign(idx);
        if (sign == 0) continue;
        out.add(SchubertSymbol::from_sorted(std::move(idx)), sign > 0 ? t.coefficient : -t.coefficient);
    }
    return out;
}

inline KVector normalize(int degree, std::initializer_list<RawTerm> raw)
{
    return normalize(degree, std::span<const RawTerm>(raw.begin(), raw.size()));
}

/// Exterior product.
inline KVector wedge(const KVector& a, const KVector& b)
{
    KVector out(a.degree() + b.degree());
    std::vector<int> idx;
    for (const auto& [sa, ca] : a.terms()) {
        for (const auto& [sb, cb] : b.terms()) {
            idx = sa.indices();
            idx.insert(idx.end(), sb.indices().begin(), sb.indices().end());
            const int sign = sort_with_sign(idx);
            if (sign == 0) continue;
            QInt c = ca * cb;
            out.add(SchubertSymbol::from_sorted(idx), sign > 0 ? c : -c);
        }
    }
    return out;
}

/// Homogeneous components by symbol weight; q is weight-neutral here.
inline std::map<int, KVector> weight_components(const KVector& v)
{
    std::map<int, KVector> out;
    for (const auto& [s, c] : v.terms()) {
        auto [it, _] = out.try_emplace(s.weight(), KVector(v.degree()));
        it->second.add(s, c);
    }
    return out;
}

/// Every basis symbol of length k whose weight is at most max_weight.
inline std::vector<SchubertSymbol> symbols_up_to_weight(int k, int max_weight)
{
    std::vector<SchubertSymbol> out;
    for (int w = 0; w <= max_weight; ++w)
        for (const auto& p : partitions_of(w, k, w)) out.push_back(partition_to_symbol(p, k));
    std::sort(out.begin(), out.end());
    return out;
}

/// Symbols 1 <= i_1 < ... < i_k <= n.
inline std::vector<SchubertSymbol> symbols_in_range(int k, int n)
{
    std::vector<SchubertSymbol> out;
    for (const auto& p : partitions_in_box(k, n - k)) out.push_back(partition_to_symbol(p, k));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Text form: terms in descending lexicographic order of the index list, each
// written c*q^d*e[i1,...,ik] with c = 1 and q^0 elided. "0" is the zero vector.

namespace detail {

inline void append_term(std::string& out, const Integer& c, unsigned qdeg, const std::string& basis_text)
{
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (out.empty())
        out += negative ? "-" : "";
    else
        out += negative ? " - " : " + ";
    bool need_star = false;
    if (mag != 1) {
        out += mag.str();
        need_star = true;
    }
    if (qdeg > 0) {
        if (need_star) out += '*';
        out += 'q';
        if (qdeg > 1) out += '^' + std::to_string(qdeg);
        need_star = true;
    }
    if (!basis_text.empty()) {
        if (need_star) out += '*';
        out += basis_text;
    } else if (!need_star) {
        out += '1';
    }
}

inline std::string join_ints(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

} // namespace detail

inline std::string to_string(const QInt& c)
{
    std::string out;
    for (const auto& [d, x] : c.coefficients()) detail::append_term(out, x, d, "");
    return out.empty() ? "0" : out;
}

inline std::string to_string(const SchubertSymbol& s) { return "e[" + detail::join_ints(s.indices()) + "]"; }

inline std::string to_string(const Partition& p) { return "(" + detail::join_ints(p.parts()) + ")"; }

inline std::string to_string(const KVector& v)
{
    std::string out;
    for (auto it = v.terms().rbegin(); it != v.terms().rend(); ++it) {
        const std::string basis_text = to_string(it->first);
        for (const auto& [d, c] : it->second.coefficients()) detail::append_term(out, c, d, basis_text);
    }
    return out.empty() ? "0" : out;
}

namespace detail {

class TextCursor {
public:
    explicit TextCursor(std::string_view s) : s_(s) {}

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done()
    {
        skip_ws();
        return pos_ >= s_.size();
    }
    bool accept(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    char peek()
    {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    Integer integer()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw invalid_input("parse error at offset " + std::to_string(pos_) + ": " + what);
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Inverse of to_string(KVector). `degree` is used for the text "0" and,
/// when given, checked against every parsed term.
inline KVector parse_kvector(std::string_view text, std::optional<int> degree = std::nullopt)
{
    detail::TextCursor cur(text);
    if (cur.peek() == '0') {
        cur.integer();
        if (!cur.done()) cur.fail("trailing input after 0");
        return KVector(degree.value_or(0));
    }
    std::vector<RawTerm> raw;
    std::optional<int> k = degree;
    bool first = true;
    while (!cur.done()) {
        bool negative = false;
        if (cur.accept('-'))
            negative = true;
        else if (!cur.accept('+') && !first)
            cur.fail("expected '+' or '-'");
        first = false;

        Integer c = 1;
        unsigned qdeg = 0;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            c = cur.integer();
            cur.expect('*');
        }
        if (cur.accept('q')) {
            qdeg = 1;
            if (cur.accept('^')) qdeg = static_cast<unsigned>(cur.integer());
            cur.expect('*');
        }
        cur.expect('e');
        cur.expect('[');
        std::vector<int> idx;
        if (!cur.accept(']')) {
            do {
                idx.push_back(static_cast<int>(cur.integer()));
            } while (cur.accept(','));
            cur.expect(']');
        }
        if (!k) k = static_cast<int>(idx.size());
        if (static_cast<int>(idx.size()) != *k) cur.fail("inconsistent term degree");
        raw.push_back({std::move(idx), QInt::monomial(negative ? Integer(-c) : c, qdeg)});
    }
    return normalize(k.value_or(0), raw);
}

/// Comma-separated integers; the empty string is the empty list.
inline std::vector<int> parse_int_list(std::string_view text)
{
    std::vector<int> out;
    detail::TextCursor cur(text);
    if (cur.done()) return out;
    do {
        bool neg = cur.accept('-');
        Integer v = cur.integer();
        if (v > 1000000) cur.fail("integer too large");
        out.push_back(neg ? -static_cast<int>(v) : static_cast<int>(v));
    } while (cur.accept(','));
    if (!cur.done()) cur.fail("unexpected trailing input");
    return out;
}

inline Partition parse_partition(std::string_view text) { return Partition(parse_int_list(text)); }

inline SchubertSymbol parse_symbol(std::string_view text) { return SchubertSymbol(parse_int_list(text)); }

} // namespace schubert
