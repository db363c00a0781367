#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace conifold {

// All homology bookkeeping is exact. Fixed-width integer paths are not used
// anywhere in the linear algebra; entries are arbitrary-precision throughout.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer int_gcd(Integer a, Integer b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer t = a % b;
        a = b;
        b = t;
    }
    return a;
}

inline int int_sign(const Integer& a) {
    if (a > 0) return 1;
    if (a < 0) return -1;
    return 0;
}

// Malformed input data (bad file, bad argument values). CLI exit code 2.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// A check that was supposed to hold did not. CLI exit code 1.
struct VerificationError : std::runtime_error {
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace conifold
