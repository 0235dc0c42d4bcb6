#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace kgk {

// All lattice arithmetic in this library is exact; torsion subgroups are the
// whole point, so no fixed-width shortcuts anywhere on the main path.
using bigint = boost::multiprecision::cpp_int;

template <typename T>
T abs_val(const T& x) {
    return x < 0 ? T(-x) : x;
}

template <typename T>
T gcd_val(T a, T b) {
    a = abs_val(a);
    b = abs_val(b);
    while (b != 0) {
        T r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// Quotient rounded toward negative infinity, so the remainder has the
// divisor's sign. The Smith reduction sweeps rely on this.
template <typename T>
T floor_div(const T& a, const T& b) {
    T q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::string to_decimal(const bigint& x) { return x.str(); }

}  // namespace kgk
