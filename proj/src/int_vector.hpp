#pragma once

#include "integer.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace prevariety {

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

IntVector make_vector(std::initializer_list<long long> values);
IntVector zero_vector(std::size_t dim);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
bool is_zero(std::span<const Integer> v);

// gcd of absolute values of the entries; zero for the zero vector.
Integer content(std::span<const Integer> v);
// Divides out the content. The zero vector is returned unchanged.
IntVector primitive(IntVector v);
bool is_primitive(std::span<const Integer> v);

IntVector negate(IntVector v);
IntVector subtract(std::span<const Integer> a, std::span<const Integer> b);
IntVector add(std::span<const Integer> a, std::span<const Integer> b);
IntVector scale(std::span<const Integer> a, const Integer& s);
// s*a + t*b
IntVector combine(const Integer& s, std::span<const Integer> a, const Integer& t,
                  std::span<const Integer> b);

// Numeric lexicographic order.
bool lex_less(std::span<const Integer> a, std::span<const Integer> b);

// "(1,-2,0)"
std::string format_vector(std::span<const Integer> v);

}  // namespace prevariety
