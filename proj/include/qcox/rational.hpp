#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qcox {

// All arithmetic in this project is exact; no floating point appears
// anywhere on a verification path.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& r);
std::string to_string(const Int& n);

} // namespace qcox
