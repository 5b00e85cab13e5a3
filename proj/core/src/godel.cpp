#include "cwb/godel.hpp"

#include <optional>

#include "cwb/errors.hpp"

namespace cwb::arith {

namespace {

const std::vector<std::uint64_t>& prime_table() {
  // Every prime below 2^21: enough positions for any proof we can build.
  static const std::vector<std::uint64_t> primes = [] {
    constexpr std::size_t kLimit = std::size_t{1} << 21;
    std::vector<bool> composite(kLimit, false);
    std::vector<std::uint64_t> out;
    for (std::size_t i = 2; i < kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::size_t j = i * i; j < kLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

constexpr std::size_t kMaxNesting = 10'000;

struct Failed {
  DecodeFailure failure;
};

class CodeReader {
 public:
  CodeReader(std::span<const std::uint64_t> codes, std::size_t& pos) : codes_(codes), pos_(pos) {}

  Term term(std::size_t depth) {
    const std::uint64_t c = next(depth, "term");
    switch (c) {
      case code::kZero:
        return Term::zero();
      case code::kSucc:
        return Term::succ(term(depth + 1));
      case code::kPlus: {
        Term t = term(depth + 1);
        return Term::add(std::move(t), term(depth + 1));
      }
      case code::kTimes: {
        Term t = term(depth + 1);
        return Term::mul(std::move(t), term(depth + 1));
      }
      default:
        if (code::is_variable(c)) return Term::var(code::variable_index(c));
        fail(pos_, "symbol code " + std::to_string(c) + " cannot start a term");
    }
  }

  Formula formula(std::size_t depth) {
    const std::uint64_t c = next(depth, "formula");
    switch (c) {
      case code::kEquals: {
        Term t = term(depth + 1);
        return Formula::eq(std::move(t), term(depth + 1));
      }
      case code::kNot:
        return Formula::negation(formula(depth + 1));
      case code::kImplies: {
        Formula f = formula(depth + 1);
        return Formula::implies(std::move(f), formula(depth + 1));
      }
      case code::kForAll: {
        const std::uint64_t v = next(depth, "quantified variable");
        if (!code::is_variable(v)) {
          fail(pos_, "symbol code " + std::to_string(v) + " is not a variable");
        }
        return Formula::forall(code::variable_index(v), formula(depth + 1));
      }
      default:
        fail(pos_, "symbol code " + std::to_string(c) + " cannot start a formula");
    }
  }

 private:
  std::uint64_t next(std::size_t depth, const char* what) {
    if (depth > kMaxNesting) fail(pos_ + 1, "nesting too deep");
    if (pos_ >= codes_.size()) fail(pos_ + 1, std::string("sequence ends inside a ") + what);
    return codes_[pos_++];
  }

  [[noreturn]] static void fail(std::size_t position, std::string reason) {
    throw Failed{DecodeFailure{position, std::move(reason)}};
  }

  std::span<const std::uint64_t> codes_;
  std::size_t& pos_;
};

void append_term_codes(const Term& t, std::vector<std::uint64_t>& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      out.push_back(code::variable(t.var_index()));
      return;
    case Term::Kind::Zero:
      out.push_back(code::kZero);
      return;
    case Term::Kind::Succ:
      out.push_back(code::kSucc);
      append_term_codes(t.left(), out);
      return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      out.push_back(t.kind() == Term::Kind::Add ? code::kPlus : code::kTimes);
      append_term_codes(t.left(), out);
      append_term_codes(t.right(), out);
      return;
  }
}

}  // namespace

std::uint64_t nth_prime(std::size_t i) {
  const auto& primes = prime_table();
  if (i >= primes.size()) throw ValidationError("sequence too long for the prime table");
  return primes[i];
}

Natural encode_sequence(std::span<const std::uint64_t> exponents) {
  Natural n = 1;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) throw ValidationError("sequence codes must be positive");
    if (i == 0) {
      n <<= exponents[i];
    } else {
      n *= boost::multiprecision::pow(Natural(nth_prime(i)), static_cast<unsigned>(exponents[i]));
    }
  }
  return n;
}

std::variant<std::vector<std::uint64_t>, DecodeFailure> decode_sequence(const Natural& n) {
  if (n < 1) return DecodeFailure{0, "codes are positive"};
  std::vector<std::uint64_t> exponents;
  Natural rest = n;
  for (std::size_t i = 0; rest != 1; ++i) {
    std::uint64_t e = 0;
    if (i == 0) {
      e = boost::multiprecision::lsb(rest);
      rest >>= e;
    } else {
      const Natural p = nth_prime(i);
      Natural q;
      Natural r;
      for (;;) {
        boost::multiprecision::divide_qr(rest, p, q, r);
        if (r != 0) break;
        rest.swap(q);
        ++e;
      }
    }
    if (e == 0) {
      return DecodeFailure{i + 1, "prime " + std::to_string(nth_prime(i)) +
                                      " has exponent 0 but the number has larger prime factors"};
    }
    exponents.push_back(e);
  }
  return exponents;
}

std::vector<std::uint64_t> symbol_codes(const Term& t) {
  std::vector<std::uint64_t> out;
  append_term_codes(t, out);
  return out;
}

void append_symbol_codes(const Formula& f, std::vector<std::uint64_t>& out) {
  switch (f.kind()) {
    case Formula::Kind::Eq:
      out.push_back(code::kEquals);
      append_term_codes(f.lhs(), out);
      append_term_codes(f.rhs(), out);
      return;
    case Formula::Kind::Not:
      out.push_back(code::kNot);
      append_symbol_codes(f.operand(), out);
      return;
    case Formula::Kind::Imp:
      out.push_back(code::kImplies);
      append_symbol_codes(f.operand(), out);
      append_symbol_codes(f.consequent(), out);
      return;
    case Formula::Kind::All:
      out.push_back(code::kForAll);
      out.push_back(code::variable(f.bound_variable()));
      append_symbol_codes(f.operand(), out);
      return;
  }
}

std::vector<std::uint64_t> symbol_codes(const Formula& f) {
  std::vector<std::uint64_t> out;
  append_symbol_codes(f, out);
  return out;
}

Natural encode_term(const Term& t) { return encode_sequence(symbol_codes(t)); }

Natural encode_formula(const Formula& f) { return encode_sequence(symbol_codes(f)); }

std::variant<Formula, DecodeFailure> read_formula(std::span<const std::uint64_t> codes,
                                                  std::size_t& pos) {
  try {
    return CodeReader(codes, pos).formula(0);
  } catch (const Failed& f) {
    return f.failure;
  }
}

std::variant<Term, DecodeFailure> decode_term(const Natural& n) {
  auto seq = decode_sequence(n);
  if (auto* failure = std::get_if<DecodeFailure>(&seq)) return *failure;
  const auto& codes = std::get<std::vector<std::uint64_t>>(seq);
  if (codes.empty()) return DecodeFailure{1, "empty sequence"};
  std::size_t pos = 0;
  try {
    Term t = CodeReader(codes, pos).term(0);
    if (pos != codes.size()) return DecodeFailure{pos + 1, "trailing symbols after the term"};
    return t;
  } catch (const Failed& f) {
    return f.failure;
  }
}

std::variant<Formula, DecodeFailure> decode_formula(const Natural& n) {
  auto seq = decode_sequence(n);
  if (auto* failure = std::get_if<DecodeFailure>(&seq)) return *failure;
  const auto& codes = std::get<std::vector<std::uint64_t>>(seq);
  if (codes.empty()) return DecodeFailure{1, "empty sequence"};
  std::size_t pos = 0;
  auto result = read_formula(codes, pos);
  if (std::holds_alternative<Formula>(result) && pos != codes.size()) {
    return DecodeFailure{pos + 1, "trailing symbols after the formula"};
  }
  return result;
}

}  // namespace cwb::arith
