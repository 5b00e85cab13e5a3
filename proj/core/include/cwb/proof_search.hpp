#pragma once

// Enumerative proof search for a fixed target formula.
//
// Literal mode tests xBy(x, code(target)) for x = start, start + 1, ...
// Every number is a candidate; those that do not decode count as non-proofs.
// The first hit is therefore the least proof code at or above start.
//
// Structural mode is an accelerated alternative. It enumerates sequences of
// well-formed formulas ending in the target (by total weight of the lines
// before it, then lexicographically within a weight class), justifies each
// line greedily and reports the code of the first fully justified sequence.
// Its hit is a proof code of the target but not necessarily the least one.

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "cwb/formula.hpp"
#include "cwb/natural.hpp"
#include "cwb/proof.hpp"

namespace cwb::arith {

enum class Enumeration : std::uint8_t { Literal, Structural };

std::string_view enumeration_name(Enumeration e);
std::optional<Enumeration> enumeration_from_name(std::string_view name);

struct Found {
  Natural x;
  std::uint64_t steps;  // candidates examined, including the hit
};
struct NotFoundWithin {
  std::uint64_t budget;
};
using SearchOutcome = std::variant<Found, NotFoundWithin>;

// Well-formed formulas of a given weight, in a fixed generation order.
class FormulaCatalog {
 public:
  const std::vector<Term>& terms(std::size_t weight);
  const std::vector<Formula>& formulas(std::size_t weight);

 private:
  std::vector<std::vector<Term>> terms_;
  std::vector<std::vector<Formula>> formulas_;
};

// Greedy justification: the first admitted schema, else MP from the lowest
// (premise, implication) pair, else Gen from the lowest earlier line.
std::optional<ProofSequence> justify(const std::vector<Formula>& lines, const AxiomSystem& sys);

class ProofSearch {
 public:
  ProofSearch(Formula target, AxiomSystem sys, Enumeration mode, Natural literal_start = 1);

  // Examines at most max_candidates further candidates. Returns the hit, if
  // any; after a hit, further calls return it again without work.
  std::optional<Found> advance(std::uint64_t max_candidates);

  std::uint64_t steps() const noexcept { return steps_; }
  const std::optional<Found>& result() const noexcept { return result_; }
  const Formula& target() const noexcept { return target_; }
  const Natural& target_code() const noexcept { return target_code_; }
  Enumeration mode() const noexcept { return mode_; }

 private:
  bool literal_step();
  bool structural_step();
  void next_weight();

  Formula target_;
  Natural target_code_;
  AxiomSystem sys_;
  Enumeration mode_;
  std::uint64_t steps_ = 0;
  std::optional<Found> result_;

  Natural next_x_;

  FormulaCatalog catalog_;
  std::size_t weight_ = 0;
  std::vector<std::vector<std::size_t>> compositions_;
  std::size_t composition_ = 0;
  std::vector<std::size_t> odometer_;
  bool fresh_composition_ = true;
};

SearchOutcome proof_search(const Formula& target, const AxiomSystem& sys, std::uint64_t budget,
                           Enumeration mode = Enumeration::Literal, const Natural& start = 1);

}  // namespace cwb::arith
