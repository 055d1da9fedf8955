#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "schubert/schubert.hpp"

namespace testutil {

inline schubert::KVector kv(const std::string& text, int degree) { return schubert::parse_kvector(text, degree); }

inline schubert::SchubertSymbol random_symbol(std::mt19937& rng, int k, int max_index)
{
    std::vector<int> pool(static_cast<std::size_t>(max_index));
    for (int i = 0; i < max_index; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::set<int> chosen(pool.begin(), pool.begin() + k);
    return schubert::SchubertSymbol(std::vector<int>(chosen.begin(), chosen.end()));
}

/// A few basis vectors with small random coefficients.
inline schubert::KVector random_kvector(std::mt19937& rng, int k, int max_index, int terms = 3)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    schubert::KVector v(k);
    for (int t = 0; t < terms; ++t) v.add(random_symbol(rng, k, max_index), coeff(rng));
    return v;
}

} // namespace testutil
