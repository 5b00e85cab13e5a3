#include "cwb/recfun.hpp"

#include <stdexcept>

#include "cwb/embedded_data.hpp"
#include "cwb/sexpr.hpp"

namespace cwb::rec {

namespace {

class ArityViolation : public std::exception {
 public:
  explicit ArityViolation(std::string message) : message_(std::move(message)) {}
  const char* what() const noexcept override { return message_.c_str(); }

 private:
  std::string message_;
};

}  // namespace

class NodeFactory {
 public:
  static RecExpr make(Kind kind, std::size_t arity, std::size_t index,
                      std::vector<RecExpr> children) {
    bool has_mu = kind == Kind::Mu;
    std::size_t size = 1;
    for (const auto& c : children) {
      has_mu = has_mu || c.contains_mu();
      size += c.node_count();
    }
    return RecExpr(std::make_shared<const Node>(
        Node{kind, arity, index, std::move(children), has_mu, size}));
  }
};

namespace {
RecExpr make(Kind kind, std::size_t arity, std::size_t index, std::vector<RecExpr> children) {
  return NodeFactory::make(kind, arity, index, std::move(children));
}
}  // namespace

ArityError::ArityError(const std::string& path, const std::string& message)
    : ValidationError("arity error at " + path + ": " + message), path_(path) {}

Kind RecExpr::kind() const noexcept { return node_->kind; }
std::size_t RecExpr::arity() const noexcept { return node_->arity; }
std::size_t RecExpr::index() const noexcept { return node_->index; }
const std::vector<RecExpr>& RecExpr::children() const noexcept { return node_->children; }
bool RecExpr::contains_mu() const noexcept { return node_->has_mu; }
std::size_t RecExpr::node_count() const noexcept { return node_->size; }

bool operator==(const RecExpr& a, const RecExpr& b) {
  if (a.node_ == b.node_) return true;
  const Node& x = *a.node_;
  const Node& y = *b.node_;
  return x.kind == y.kind && x.arity == y.arity && x.index == y.index && x.children == y.children;
}

RecExpr RecExpr::zero(std::size_t arity) { return make(Kind::Zero, arity, 0, {}); }

RecExpr RecExpr::succ() { return make(Kind::Succ, 1, 0, {}); }

RecExpr RecExpr::proj(std::size_t index, std::size_t arity) {
  if (index < 1 || index > arity) {
    throw ArityViolation("projection index " + std::to_string(index) + " outside 1.." +
                         std::to_string(arity));
  }
  return make(Kind::Proj, arity, index, {});
}

RecExpr RecExpr::comp(RecExpr outer, std::vector<RecExpr> inner) {
  if (inner.empty()) throw ArityViolation("composition needs at least one inner term");
  if (outer.arity() != inner.size()) {
    throw ArityViolation("outer term has arity " + std::to_string(outer.arity()) + " but " +
                         std::to_string(inner.size()) + " inner terms were given");
  }
  const std::size_t n = inner.front().arity();
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i].arity() != n) {
      throw ArityViolation("inner term " + std::to_string(i + 1) + " has arity " +
                           std::to_string(inner[i].arity()) + ", expected " + std::to_string(n));
    }
  }
  std::vector<RecExpr> children;
  children.reserve(inner.size() + 1);
  children.push_back(std::move(outer));
  for (auto& g : inner) children.push_back(std::move(g));
  return make(Kind::Comp, n, 0, std::move(children));
}

RecExpr RecExpr::primrec(RecExpr base, RecExpr step) {
  const std::size_t n = base.arity();
  if (step.arity() != n + 2) {
    throw ArityViolation("step term has arity " + std::to_string(step.arity()) +
                         ", expected base arity + 2 = " + std::to_string(n + 2));
  }
  return make(Kind::PrimRec, n + 1, 0, {std::move(base), std::move(step)});
}

RecExpr RecExpr::mu(RecExpr kernel) {
  if (kernel.arity() == 0) throw ArityViolation("mu kernel must have arity at least 1");
  if (kernel.contains_mu()) throw ArityViolation("nested mu is not supported");
  const std::size_t n = kernel.arity() - 1;
  return make(Kind::Mu, n, 0, {std::move(kernel)});
}

// ---------------------------------------------------------------------------
// Library and parsing

void Library::define(std::string name, RecExpr term) {
  if (terms_.count(name) == 0) order_.push_back(name);
  terms_.insert_or_assign(std::move(name), std::move(term));
}

const RecExpr* Library::find(std::string_view name) const {
  auto it = terms_.find(name);
  return it == terms_.end() ? nullptr : &it->second;
}

std::vector<std::string> Library::names() const { return order_; }

namespace {

bool is_keyword(std::string_view s) {
  return s == "zero" || s == "succ" || s == "proj" || s == "comp" || s == "primrec" ||
         s == "mu" || s == "def";
}

std::string child_path(const std::string& parent, std::string_view step) {
  return parent.empty() ? std::string(step) : parent + "/" + std::string(step);
}

RecExpr build(const sexpr::Node& n, const Library& lib, const std::string& path) {
  const std::string here = path.empty() ? "(root)" : path;
  if (n.is_atom()) {
    if (const RecExpr* named = lib.find(n.atom)) return *named;
    throw ParseError("unknown term name '" + n.atom + "'", n.line, n.column);
  }
  if (n.items.empty() || !n.items.front().is_atom()) {
    throw ParseError("expected (keyword ...)", n.line, n.column);
  }
  const std::string& head = n.items.front().atom;
  const std::size_t argc = n.items.size() - 1;
  auto expect_args = [&](std::size_t count) {
    if (argc != count) {
      throw ParseError("'" + head + "' takes " + std::to_string(count) + " argument(s), got " +
                           std::to_string(argc),
                       n.line, n.column);
    }
  };

  try {
    if (head == "zero") {
      expect_args(1);
      return RecExpr::zero(sexpr::atom_to_u64(n.items[1], "zero arity"));
    }
    if (head == "succ") {
      expect_args(0);
      return RecExpr::succ();
    }
    if (head == "proj") {
      expect_args(2);
      return RecExpr::proj(sexpr::atom_to_u64(n.items[1], "projection index"),
                           sexpr::atom_to_u64(n.items[2], "projection arity"));
    }
    if (head == "comp") {
      if (argc < 2) throw ParseError("'comp' needs an outer term and at least one inner term", n.line, n.column);
      RecExpr outer = build(n.items[1], lib, child_path(path, "comp.outer"));
      std::vector<RecExpr> inner;
      for (std::size_t i = 2; i < n.items.size(); ++i) {
        inner.push_back(build(n.items[i], lib, child_path(path, "comp.arg" + std::to_string(i - 1))));
      }
      return RecExpr::comp(std::move(outer), std::move(inner));
    }
    if (head == "primrec") {
      expect_args(2);
      RecExpr base = build(n.items[1], lib, child_path(path, "primrec.base"));
      RecExpr step = build(n.items[2], lib, child_path(path, "primrec.step"));
      return RecExpr::primrec(std::move(base), std::move(step));
    }
    if (head == "mu") {
      expect_args(1);
      return RecExpr::mu(build(n.items[1], lib, child_path(path, "mu.kernel")));
    }
  } catch (const ArityViolation& e) {
    throw ArityError(here, e.what());
  }
  throw ParseError("unknown form '" + head + "'", n.line, n.column);
}

}  // namespace

RecExpr parse_rec(std::string_view text, const Library& library) {
  try {
    return build(sexpr::parse_one(text), library, "");
  } catch (const ArityViolation& e) {
    throw ArityError("(root)", e.what());
  }
}

Library parse_library(std::string_view text, const Library& base) {
  Library lib = base;
  for (const auto& form : sexpr::parse_all(text)) {
    if (!form.is_form("def") || form.items.size() != 3 || !form.items[1].is_atom()) {
      throw ParseError("expected (def name term)", form.line, form.column);
    }
    const std::string& name = form.items[1].atom;
    if (is_keyword(name)) throw ParseError("'" + name + "' is reserved", form.line, form.column);
    lib.define(name, build(form.items[2], lib, name));
  }
  return lib;
}

const Library& standard_library() {
  static const Library lib = parse_library(embedded::kStandardLibrary);
  return lib;
}

std::string to_sexpr(const RecExpr& term) {
  switch (term.kind()) {
    case Kind::Zero:
      return "(zero " + std::to_string(term.arity()) + ")";
    case Kind::Succ:
      return "(succ)";
    case Kind::Proj:
      return "(proj " + std::to_string(term.index()) + " " + std::to_string(term.arity()) + ")";
    case Kind::Comp: {
      std::string out = "(comp";
      for (const auto& c : term.children()) out += " " + to_sexpr(c);
      return out + ")";
    }
    case Kind::PrimRec:
      return "(primrec " + to_sexpr(term.children()[0]) + " " + to_sexpr(term.children()[1]) + ")";
    case Kind::Mu:
      return "(mu " + to_sexpr(term.children()[0]) + ")";
  }
  return {};
}

// ---------------------------------------------------------------------------
// Big-step evaluation

namespace {

struct OutOfFuel {};

struct Fuel {
  bool metered = false;
  std::uint64_t remaining = 0;
  std::uint64_t used = 0;

  void burn() {
    if (metered) {
      if (remaining == 0) throw OutOfFuel{};
      --remaining;
    }
    ++used;
  }
};

Natural eval_node(const Node& n, std::span<const Natural> args, Fuel& fuel) {
  fuel.burn();
  switch (n.kind) {
    case Kind::Zero:
      return Natural(0);
    case Kind::Succ:
      return args[0] + 1;
    case Kind::Proj:
      return args[n.index - 1];
    case Kind::Comp: {
      std::vector<Natural> inner;
      inner.reserve(n.children.size() - 1);
      for (std::size_t i = 1; i < n.children.size(); ++i) {
        inner.push_back(eval_node(*n.children[i].node(), args, fuel));
      }
      return eval_node(*n.children[0].node(), inner, fuel);
    }
    case Kind::PrimRec: {
      const std::size_t params = n.arity - 1;
      std::vector<Natural> step_args(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(params));
      Natural value = eval_node(*n.children[0].node(), step_args, fuel);
      const Natural& limit = args[params];
      step_args.push_back(Natural(0));
      step_args.push_back(Natural(0));
      for (Natural k = 0; k < limit; ++k) {
        fuel.burn();
        step_args[params] = k;
        step_args[params + 1] = std::move(value);
        value = eval_node(*n.children[1].node(), step_args, fuel);
      }
      return value;
    }
    case Kind::Mu:
      break;
  }
  throw ValidationError("eval_total cannot evaluate a mu node");
}

void check_args(const RecExpr& term, std::span<const Natural> args) {
  if (args.size() != term.arity()) {
    throw ValidationError("term has arity " + std::to_string(term.arity()) + " but " +
                          std::to_string(args.size()) + " argument(s) were given");
  }
  for (const auto& a : args) {
    if (a < 0) throw ValidationError("arguments must be natural numbers");
  }
}

}  // namespace

Natural eval_total(const RecExpr& term, std::span<const Natural> args) {
  check_args(term, args);
  if (term.contains_mu()) throw ValidationError("eval_total requires a mu-free term");
  Fuel fuel;
  return eval_node(*term.node(), args, fuel);
}

MuOutcome eval_mu(const RecExpr& term, std::span<const Natural> args, std::uint64_t budget) {
  check_args(term, args);
  if (term.kind() != Kind::Mu) throw ValidationError("eval_mu requires a mu term at the root");
  const Node& kernel = *term.children()[0].node();

  Fuel fuel{true, budget, 0};
  MuTrace trace;
  std::vector<Natural> kernel_args(args.begin(), args.end());
  kernel_args.push_back(Natural(0));
  for (Natural y = 0;; ++y) {
    kernel_args.back() = y;
    try {
      Natural value = eval_node(kernel, kernel_args, fuel);
      const bool zero = value == 0;
      trace.witnesses.emplace_back(y, std::move(value));
      if (zero) {
        trace.result = y;
        return trace;
      }
    } catch (const OutOfFuel&) {
      return MuBudgetExhausted{y, fuel.used};
    }
  }
}

// ---------------------------------------------------------------------------
// Small-step evaluation

Evaluation::Evaluation(RecExpr term, std::vector<Natural> args) : root_(std::move(term)) {
  check_args(root_, args);
  pending_ = EvalTask{root_.node(), std::move(args)};
}

Evaluation start_eval(RecExpr term, std::vector<Natural> args) {
  return Evaluation(std::move(term), std::move(args));
}

bool Evaluation::done() const noexcept { return done_; }

const Natural& Evaluation::value() const {
  if (!done_) throw std::logic_error("evaluation has not finished");
  return *returned_;
}

std::optional<Natural> Evaluation::mu_candidate() const {
  for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
    if (const auto* mu = std::get_if<MuFrame>(&*it)) return mu->candidate;
  }
  return std::nullopt;
}

std::optional<Natural> Evaluation::advance(std::uint64_t slice) {
  if (done_) throw std::logic_error("advance called on a finished evaluation");
  for (std::uint64_t i = 0; i < slice && !done_; ++i) transition();
  if (done_) return *returned_;
  return std::nullopt;
}

void Evaluation::transition() {
  ++transitions_;
  if (pending_) {
    EvalTask task = std::move(*pending_);
    pending_.reset();
    apply(std::move(task));
  } else {
    Natural value = std::move(*returned_);
    returned_.reset();
    deliver(std::move(value));
  }
  if (returned_ && stack_.empty()) done_ = true;
}

void Evaluation::apply(EvalTask task) {
  const Node& n = *task.term;
  switch (n.kind) {
    case Kind::Zero:
      returned_ = Natural(0);
      return;
    case Kind::Succ:
      returned_ = task.args[0] + 1;
      return;
    case Kind::Proj:
      returned_ = std::move(task.args[n.index - 1]);
      return;
    case Kind::Comp: {
      pending_ = EvalTask{n.children[1].node(), task.args};
      stack_.emplace_back(CompFrame{task.term, std::move(task.args), {}});
      return;
    }
    case Kind::PrimRec: {
      Natural limit = std::move(task.args.back());
      task.args.pop_back();
      pending_ = EvalTask{n.children[0].node(), task.args};
      stack_.emplace_back(PrimRecFrame{task.term, std::move(task.args), std::move(limit), Natural(0)});
      return;
    }
    case Kind::Mu: {
      std::vector<Natural> kernel_args = task.args;
      kernel_args.push_back(Natural(0));
      pending_ = EvalTask{n.children[0].node(), std::move(kernel_args)};
      stack_.emplace_back(MuFrame{task.term, std::move(task.args), Natural(0)});
      return;
    }
  }
}

void Evaluation::deliver(Natural value) {
  Frame& top = stack_.back();
  if (auto* comp = std::get_if<CompFrame>(&top)) {
    comp->results.push_back(std::move(value));
    const auto& children = comp->term->children;
    if (comp->results.size() < children.size() - 1) {
      pending_ = EvalTask{children[comp->results.size() + 1].node(), comp->args};
    } else {
      EvalTask outer{children[0].node(), std::move(comp->results)};
      stack_.pop_back();
      pending_ = std::move(outer);
    }
    return;
  }
  if (auto* pr = std::get_if<PrimRecFrame>(&top)) {
    if (pr->counter == pr->limit) {
      stack_.pop_back();
      returned_ = std::move(value);
      return;
    }
    std::vector<Natural> step_args = pr->params;
    step_args.push_back(pr->counter);
    step_args.push_back(std::move(value));
    ++pr->counter;
    pending_ = EvalTask{pr->term->children[1].node(), std::move(step_args)};
    return;
  }
  auto& mu = std::get<MuFrame>(top);
  if (value == 0) {
    Natural found = std::move(mu.candidate);
    stack_.pop_back();
    returned_ = std::move(found);
    return;
  }
  ++mu.candidate;
  std::vector<Natural> kernel_args = mu.params;
  kernel_args.push_back(mu.candidate);
  pending_ = EvalTask{mu.term->children[0].node(), std::move(kernel_args)};
}

}  // namespace cwb::rec
