#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hypercsf {

// Exact integer coefficient type: machine-word sized until a value outgrows
// it, then promoted to arbitrary precision.
using Int = boost::multiprecision::cpp_int;

Int factorial(int n);
Int binomial(int n, int k);

}  // namespace hypercsf
