#pragma once

// Direct structural recursion over term trees with machine integers, and
// closed-form arithmetic for the shipped library.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cwb/recfun.hpp"

namespace oracle {

inline std::uint64_t naive_eval(const cwb::rec::RecExpr& t, const std::vector<std::uint64_t>& x) {
  using cwb::rec::Kind;
  const auto& kids = t.children();
  switch (t.kind()) {
    case Kind::Zero:
      return 0;
    case Kind::Succ:
      return x.at(0) + 1;
    case Kind::Proj:
      return x.at(t.index() - 1);
    case Kind::Comp: {
      std::vector<std::uint64_t> inner;
      for (std::size_t i = 1; i < kids.size(); ++i) inner.push_back(naive_eval(kids[i], x));
      return naive_eval(kids[0], inner);
    }
    case Kind::PrimRec: {
      std::vector<std::uint64_t> params(x.begin(), x.end() - 1);
      std::uint64_t acc = naive_eval(kids[0], params);
      for (std::uint64_t y = 0; y < x.back(); ++y) {
        std::vector<std::uint64_t> args = params;
        args.push_back(y);
        args.push_back(acc);
        acc = naive_eval(kids[1], args);
      }
      return acc;
    }
    case Kind::Mu: {
      std::vector<std::uint64_t> args = x;
      args.push_back(0);
      for (std::uint64_t y = 0; y < 100'000; ++y) {
        args.back() = y;
        if (naive_eval(kids[0], args) == 0) return y;
      }
      throw std::runtime_error("oracle gave up on an unbounded search");
    }
  }
  throw std::logic_error("unknown term kind");
}

inline std::uint64_t native_add(std::uint64_t a, std::uint64_t b) { return a + b; }
inline std::uint64_t native_mul(std::uint64_t a, std::uint64_t b) { return a * b; }
inline std::uint64_t native_pred(std::uint64_t a) { return a == 0 ? 0 : a - 1; }
inline std::uint64_t native_sub(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : 0; }
inline std::uint64_t native_sg(std::uint64_t a) { return a == 0 ? 0 : 1; }

}  // namespace oracle
