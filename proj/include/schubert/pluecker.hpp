#pragma once

// Plucker coordinates of a k-plane given by an integer k x n matrix, and its
// Schubert symbol with respect to the standard flag E_i = <e_{i+1}, ..., e_n>.

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schubert/exterior_core.hpp"

namespace schubert {

/// Raised when the rows of a matrix do not span a k-plane.
class rank_deficient : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IntegerMatrix {
public:
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows * cols))
    {
        if (rows < 0 || cols < 0) throw invalid_input("negative matrix dimension");
    }

    explicit IntegerMatrix(const std::vector<std::vector<Integer>>& rows)
        : IntegerMatrix(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows.front().size()))
    {
        for (int r = 0; r < rows_; ++r) {
            if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != cols_) throw invalid_input("ragged matrix rows");
            for (int c = 0; c < cols_; ++c) at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        }
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    Integer& at(int r, int c) { return entries_[static_cast<std::size_t>(r * cols_ + c)]; }
    const Integer& at(int r, int c) const { return entries_[static_cast<std::size_t>(r * cols_ + c)]; }

    /// Rows as lines, integers separated by whitespace; blank lines ignored.
    static IntegerMatrix parse(std::istream& in)
    {
        std::vector<std::vector<Integer>> rows;
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            std::vector<Integer> row;
            std::string tok;
            while (ls >> tok) {
                std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
                if (start == tok.size() || tok.find_first_not_of("0123456789", start) != std::string::npos)
                    throw invalid_input("matrix entry is not an integer: " + tok);
                row.emplace_back(tok[0] == '+' ? tok.substr(1) : tok);
            }
            if (!row.empty()) rows.push_back(std::move(row));
        }
        if (rows.empty()) throw invalid_input("empty matrix");
        return IntegerMatrix(rows);
    }

    /// The k x j matrix of the listed columns (1-based).
    IntegerMatrix columns(const std::vector<int>& cols) const
    {
        IntegerMatrix out(rows_, static_cast<int>(cols.size()));
        for (int r = 0; r < rows_; ++r)
            for (std::size_t j = 0; j < cols.size(); ++j) {
                if (cols[j] < 1 || cols[j] > cols_) throw invalid_input("column index out of range");
                out.at(r, static_cast<int>(j)) = at(r, cols[j] - 1);
            }
        return out;
    }

    /// Exact rank by fraction-free (Bareiss) elimination.
    int rank() const
    {
        IntegerMatrix m = *this;
        Integer prev = 1;
        int rank = 0;
        for (int c = 0; c < cols_ && rank < rows_; ++c) {
            int pivot = -1;
            for (int r = rank; r < rows_; ++r)
                if (m.at(r, c) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            if (pivot != rank)
                for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
            for (int r = rank + 1; r < rows_; ++r) {
                for (int j = c + 1; j < cols_; ++j) m.at(r, j) = (m.at(rank, c) * m.at(r, j) - m.at(r, c) * m.at(rank, j)) / prev;
                m.at(r, c) = 0;
            }
            prev = m.at(rank, c);
            ++rank;
        }
        return rank;
    }

    /// Determinant of a square matrix (Bareiss).
    Integer determinant() const
    {
        if (rows_ != cols_) throw invalid_input("determinant of a non-square matrix");
        IntegerMatrix m = *this;
        Integer prev = 1;
        int sign = 1;
        for (int c = 0; c < cols_; ++c) {
            int pivot = -1;
            for (int r = c; r < rows_; ++r)
                if (m.at(r, c) != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            if (pivot != c) {
                for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(c, j));
                sign = -sign;
            }
            for (int r = c + 1; r < rows_; ++r) {
                for (int j = c + 1; j < cols_; ++j) m.at(r, j) = (m.at(c, c) * m.at(r, j) - m.at(r, c) * m.at(c, j)) / prev;
                m.at(r, c) = 0;
            }
            prev = m.at(c, c);
        }
        return rows_ == 0 ? Integer(1) : Integer(sign * prev);
    }

private:
    int rows_;
    int cols_;
    std::vector<Integer> entries_;
};

/// e^{i_1} ^ ... ^ e^{i_k} evaluated on the rows: the k x k minor on columns I.
inline Integer pluecker_coordinate(const IntegerMatrix& m, const SchubertSymbol& sym)
{
    if (sym.size() != m.rows()) throw invalid_input("symbol length must equal the number of rows");
    return m.columns(sym.indices()).determinant();
}

/// Every k x k minor, indexed by symbols in lexicographic order.
inline std::vector<std::pair<SchubertSymbol, Integer>> pluecker_coordinates(const IntegerMatrix& m)
{
    std::vector<std::pair<SchubertSymbol, Integer>> out;
    if (m.rows() > m.cols()) return out;
    for (const auto& sym : symbols_in_range(m.rows(), m.cols())) out.emplace_back(sym, pluecker_coordinate(m, sym));
    return out;
}

/// Greedy jump detection: i_1 is the first nonzero column and each i_j the
/// first column after i_{j-1} that raises the rank of the chosen columns.
inline SchubertSymbol schubert_symbol_of(const IntegerMatrix& m)
{
    const int k = m.rows();
    if (k == 0 || m.rank() < k) throw rank_deficient("matrix rows are not linearly independent");
    std::vector<int> chosen;
    for (int h = 1; h <= m.cols() && static_cast<int>(chosen.size()) < k; ++h) {
        std::vector<int> trial = chosen;
        trial.push_back(h);
        if (m.columns(trial).rank() == static_cast<int>(trial.size())) chosen = std::move(trial);
    }
    return SchubertSymbol(chosen);
}

/// j_p <= i_p for every p.
inline bool bruhat_leq(const SchubertSymbol& a, const SchubertSymbol& b)
{
    if (a.size() != b.size()) return false;
    for (std::size_t p = 0; p < static_cast<std::size_t>(a.size()); ++p)
        if (a[p] > b[p]) return false;
    return true;
}

struct BruhatCertificate {
    bool holds = false;  // symbol minor nonzero and every smaller minor zero
    Integer symbol_minor;
    std::vector<SchubertSymbol> violations;  // smaller symbols with nonzero minor
};

inline BruhatCertificate bruhat_certificate(const IntegerMatrix& m, const SchubertSymbol& sym)
{
    BruhatCertificate cert;
    cert.symbol_minor = pluecker_coordinate(m, sym);
    for (const auto& [other, minor] : pluecker_coordinates(m))
        if (other != sym && bruhat_leq(other, sym) && minor != 0) cert.violations.push_back(other);
    cert.holds = cert.symbol_minor != 0 && cert.violations.empty();
    return cert;
}

} // namespace schubert
