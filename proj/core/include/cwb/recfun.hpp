#pragma once

// Mu-recursive function terms.
//
// Terms are immutable trees, arity-checked on construction:
//   Zero(n)            arity n, constant 0
//   Succ               arity 1
//   Proj(i, n)         arity n, 1 <= i <= n
//   Comp(f, g1..gk)    f arity k, every gi arity n; result arity n
//   PrimRec(b, s)      b arity n, s arity n+2; result arity n+1, recursion on
//                      the last argument: h(x, 0) = b(x), h(x, y+1) = s(x, y, h(x, y))
//   Mu(f)              f arity n+1 and mu-free; result arity n,
//                      mu y . f(x, y) = 0

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cwb/errors.hpp"
#include "cwb/natural.hpp"

namespace cwb::rec {

enum class Kind : std::uint8_t { Zero, Succ, Proj, Comp, PrimRec, Mu };

struct Node;
class NodeFactory;

class RecExpr {
 public:
  static RecExpr zero(std::size_t arity);
  static RecExpr succ();
  static RecExpr proj(std::size_t index, std::size_t arity);
  static RecExpr comp(RecExpr outer, std::vector<RecExpr> inner);
  static RecExpr primrec(RecExpr base, RecExpr step);
  static RecExpr mu(RecExpr kernel);

  Kind kind() const noexcept;
  std::size_t arity() const noexcept;
  // Proj only: the 1-based selected position.
  std::size_t index() const noexcept;
  // Comp: outer then inner terms. PrimRec: base, step. Mu: kernel.
  const std::vector<RecExpr>& children() const noexcept;
  bool contains_mu() const noexcept;
  std::size_t node_count() const noexcept;

  const Node* node() const noexcept { return node_.get(); }

  friend bool operator==(const RecExpr& a, const RecExpr& b);

 private:
  friend class NodeFactory;
  explicit RecExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Node {
  Kind kind;
  std::size_t arity;
  std::size_t index;  // Proj only
  std::vector<RecExpr> children;
  bool has_mu;
  std::size_t size;
};

// Arity discipline violated. path names the offending node, e.g.
// "comp.arg2/primrec.step".
class ArityError : public ValidationError {
 public:
  ArityError(const std::string& path, const std::string& message);
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// Named terms. Later definitions may refer to earlier ones by bare name.
class Library {
 public:
  void define(std::string name, RecExpr term);
  const RecExpr* find(std::string_view name) const;
  std::vector<std::string> names() const;  // definition order
  bool empty() const noexcept { return order_.empty(); }

 private:
  std::map<std::string, RecExpr, std::less<>> terms_;
  std::vector<std::string> order_;
};

// Reads `(def name term)` forms. Names resolve against `base` and earlier
// definitions in the same text.
Library parse_library(std::string_view text, const Library& base = {});

// The shipped library: add, mul, pred, sub, sg.
const Library& standard_library();

// Grammar: (zero n) (succ) (proj i n) (comp f g1 ... gk) (primrec base step)
// (mu f), plus bare names resolved in `library`.
RecExpr parse_rec(std::string_view text, const Library& library = standard_library());

std::string to_sexpr(const RecExpr& term);

// Total evaluation of a mu-free term. Throws ValidationError on arity
// mismatch or when a Mu node is present.
Natural eval_total(const RecExpr& term, std::span<const Natural> args);

// Certificate of a minimisation: witnesses[y] = (y, kernel(args, y)) for
// y = 0..result, nonzero below result and zero at result.
struct MuTrace {
  Natural result;
  std::vector<std::pair<Natural, Natural>> witnesses;
};

struct MuBudgetExhausted {
  Natural frontier;  // the candidate y being examined when the budget ran out
  std::uint64_t steps = 0;
};

using MuOutcome = std::variant<MuTrace, MuBudgetExhausted>;

// Unbounded search y = 0, 1, 2, ... over the kernel of a Mu term. One budget
// unit is one node application or one primitive-recursion iteration.
MuOutcome eval_mu(const RecExpr& term, std::span<const Natural> args, std::uint64_t budget);

// A resumable small-step evaluation. One transition is one operation on the
// explicit continuation stack, so the work done per advance() is bounded by
// the slice no matter how expensive a single kernel call is.
class Evaluation {
 public:
  Evaluation(RecExpr term, std::vector<Natural> args);

  // Performs at most `slice` transitions; returns the value once done.
  // Throws std::logic_error when called on a finished evaluation.
  std::optional<Natural> advance(std::uint64_t slice);

  bool done() const noexcept;
  const Natural& value() const;  // requires done()
  std::uint64_t transitions() const noexcept { return transitions_; }
  std::size_t stack_depth() const noexcept { return stack_.size(); }
  // Candidate y of the innermost active Mu frame, if any.
  std::optional<Natural> mu_candidate() const;

 private:
  struct EvalTask {
    const Node* term;
    std::vector<Natural> args;
  };
  struct CompFrame {
    const Node* term;
    std::vector<Natural> args;
    std::vector<Natural> results;
  };
  struct PrimRecFrame {
    const Node* term;
    std::vector<Natural> params;  // all arguments but the recursion one
    Natural limit;
    Natural counter;
  };
  struct MuFrame {
    const Node* term;
    std::vector<Natural> params;
    Natural candidate;
  };
  using Frame = std::variant<CompFrame, PrimRecFrame, MuFrame>;

  void transition();
  void apply(EvalTask task);
  void deliver(Natural value);

  RecExpr root_;
  std::optional<EvalTask> pending_;  // set when the next transition evaluates
  std::optional<Natural> returned_;  // set when the next transition returns
  std::vector<Frame> stack_;
  std::uint64_t transitions_ = 0;
  bool done_ = false;
};

Evaluation start_eval(RecExpr term, std::vector<Natural> args);

}  // namespace cwb::rec
