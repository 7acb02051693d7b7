#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace superdim {

// Exact arbitrary-precision integer. Multiplicities, Weyl dimensions and
// binomials overflow 64 bit quickly, so every count in the library uses this.
using Int = boost::multiprecision::cpp_int;

}  // namespace superdim
