#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cwb::sexpr {

// A datum of the shared s-expression reader. Atoms are maximal runs of
// characters other than whitespace, parentheses and ';' (which starts a
// comment running to end of line).
struct Node {
  bool is_list = false;
  std::string atom;
  std::vector<Node> items;
  std::size_t line = 0;
  std::size_t column = 0;

  bool is_atom() const noexcept { return !is_list; }
  // True for a list whose first item is the atom `head`.
  bool is_form(std::string_view head) const;
};

std::vector<Node> parse_all(std::string_view text);
// Exactly one datum, otherwise ParseError.
Node parse_one(std::string_view text);

std::string to_string(const Node& node);

// Reads a decimal atom; throws ParseError pointing at the node otherwise.
std::uint64_t atom_to_u64(const Node& node, std::string_view what);

}  // namespace cwb::sexpr
