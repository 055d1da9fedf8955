#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace schubert {

// Arbitrary precision integer. cpp_int keeps small values inline and
// promotes on overflow, so there is no silent wraparound anywhere.
using Integer = boost::multiprecision::cpp_int;

// Raised for malformed arguments: bad partitions, symbols out of range,
// degree mismatches, classes outside the box.
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline Integer binomial(unsigned n, unsigned k)
{
    if (k > n) return 0;
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace schubert
