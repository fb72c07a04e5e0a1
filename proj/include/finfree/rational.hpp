#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace finfree {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when an exact computation would exceed the configured size bounds.
class resource_error : public std::runtime_error {
  public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when two polynomials of different declared degree are combined.
class degree_mismatch_error : public std::invalid_argument {
  public:
    explicit degree_mismatch_error(const std::string& what) : std::invalid_argument(what) {}
};

Int factorial(int n);
Int binomial(int n, int k);

Rat rising_factorial(const Rat& x, int k);
Rat falling_factorial(const Rat& x, int k);

// "p/q", or just "n" when the denominator is 1.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

}  // namespace finfree
