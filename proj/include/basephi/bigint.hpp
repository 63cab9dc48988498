#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace basephi {

// Unbounded signed integer used throughout: Lucas/Fibonacci growth overflows
// 64-bit near index 90, and every comparison in the trusted path must be exact.
using Int = boost::multiprecision::cpp_int;

}  // namespace basephi
