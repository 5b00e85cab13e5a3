#pragma once

// Gödel numbering by prime powers.
//
// A formula is written in prefix (Polish) notation and each symbol replaced
// by its code; the sequence e1, e2, ..., en of codes is numbered
// 2^e1 * 3^e2 * ... * pn^en. Every code is at least 1, so a number is a code
// exactly when its prime factors are the first n primes, each occurring.
//
// Symbol codes: odd numbers for the fixed symbols, even numbers from 18 up
// for variables (v_k has code 16 + 2k).

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cwb/formula.hpp"
#include "cwb/natural.hpp"

namespace cwb::arith {

namespace code {
inline constexpr std::uint64_t kZero = 1;
inline constexpr std::uint64_t kSucc = 3;
inline constexpr std::uint64_t kPlus = 5;
inline constexpr std::uint64_t kTimes = 7;
inline constexpr std::uint64_t kEquals = 9;
inline constexpr std::uint64_t kNot = 11;
inline constexpr std::uint64_t kImplies = 13;
inline constexpr std::uint64_t kForAll = 15;
// Justification markers, used only inside proof codes.
inline constexpr std::uint64_t kAxiom = 17;
inline constexpr std::uint64_t kModusPonens = 19;
inline constexpr std::uint64_t kGeneralization = 21;

constexpr std::uint64_t variable(VarIndex k) { return 16 + 2 * static_cast<std::uint64_t>(k); }
constexpr bool is_variable(std::uint64_t c) {
  return c >= 18 && c % 2 == 0 && c <= variable(std::numeric_limits<VarIndex>::max());
}
constexpr VarIndex variable_index(std::uint64_t c) { return static_cast<VarIndex>((c - 16) / 2); }
}  // namespace code

// position is 1-based within the exponent sequence (0: the number itself).
struct DecodeFailure {
  std::size_t position = 0;
  std::string reason;
};

// The i-th prime, i starting at 0 (2, 3, 5, ...).
std::uint64_t nth_prime(std::size_t i);

Natural encode_sequence(std::span<const std::uint64_t> exponents);
std::variant<std::vector<std::uint64_t>, DecodeFailure> decode_sequence(const Natural& n);

std::vector<std::uint64_t> symbol_codes(const Term& t);
std::vector<std::uint64_t> symbol_codes(const Formula& f);
void append_symbol_codes(const Formula& f, std::vector<std::uint64_t>& out);

Natural encode_term(const Term& t);
Natural encode_formula(const Formula& f);

std::variant<Term, DecodeFailure> decode_term(const Natural& n);
std::variant<Formula, DecodeFailure> decode_formula(const Natural& n);

// Reads one formula starting at codes[pos] and advances pos past it.
std::variant<Formula, DecodeFailure> read_formula(std::span<const std::uint64_t> codes,
                                                  std::size_t& pos);

}  // namespace cwb::arith
