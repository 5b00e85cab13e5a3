#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cwb {

// Arbitrary-precision natural numbers, shared by every module so that
// Gödel numbers, evaluator values and counters never change representation.
using Natural = boost::multiprecision::cpp_int;

// Parses a decimal natural number. Throws ValidationError on anything else.
Natural parse_natural(std::string_view text);

std::string to_string(const Natural& n);

// Narrowing conversion; throws ValidationError when n does not fit.
std::uint64_t to_u64(const Natural& n, std::string_view what);

}  // namespace cwb
