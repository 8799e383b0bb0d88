#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hdepth {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Rank of a dense matrix over Q by exact Gaussian elimination.
std::size_t exact_rank(std::vector<std::vector<Rational>> rows);

}  // namespace hdepth
