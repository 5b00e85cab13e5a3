#include "cwb/natural.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "cwb/errors.hpp"

namespace cwb {

Natural parse_natural(std::string_view text) {
  if (text.empty() ||
      !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ValidationError("not a natural number: '" + std::string(text) + "'");
  }
  return Natural(std::string(text));
}

std::string to_string(const Natural& n) { return n.str(); }

std::uint64_t to_u64(const Natural& n, std::string_view what) {
  if (n < 0 || n > Natural(std::numeric_limits<std::uint64_t>::max())) {
    throw ValidationError(std::string(what) + " out of range: " + n.str());
  }
  return n.convert_to<std::uint64_t>();
}

}  // namespace cwb
