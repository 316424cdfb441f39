#pragma once

// Expression language for classes in Z[L]:
//
//   expr := sum ("==" sum)?
//   sum  := prod (("+" | "-") prod)*
//   prod := atom (("*" | "div") atom)*
//   atom := INT | "L" | ctor "(" args ")" | "(" expr ")"
//   ctor := P | Gr | H | F1 | F2 | SumEven
//
// Gr and H take (2, n); the others take a single integer.

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pfgr/ring.hpp"

namespace pfgr::dsl {

struct Position {
  int line = 1;
  int column = 1;
};

struct Node {
  enum class Kind { Integer, Lefschetz, Call, Add, Sub, Mul, Div, Eq };

  Kind kind;
  Position pos;
  std::size_t begin = 0;  // source span, for diagnostics
  std::size_t end = 0;
  mpz_class value;  // Integer
  std::string name;  // Call
  std::vector<mpz_class> args;  // Call
  std::unique_ptr<Node> lhs, rhs;
};

// Throws ParseError with "line L, column C" in the message.
std::unique_ptr<Node> parse(std::string_view source);

using Value = std::variant<LPoly, bool>;

// Throws EvalError naming the offending subexpression.
Value evaluate(const Node& node, std::string_view source);
Value eval(std::string_view source);

std::string to_string(const Value& v);

}  // namespace pfgr::dsl
