#include "pfgr/dsl.hpp"

#include <cctype>

#include "pfgr/pfaffian.hpp"
#include "pfgr/schubert.hpp"

namespace pfgr::dsl {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, LParen, RParen, Comma, EqEq, End };

struct Token {
  Tok kind;
  std::string text;
  Position pos;
  std::size_t begin;
  std::size_t end;
};

std::string where(Position p) {
  return "line " + std::to_string(p.line) + ", column " + std::to_string(p.column);
}

[[noreturn]] void parse_error(Position p, const std::string& msg) {
  throw Error(ErrorKind::ParseError, where(p) + ": " + msg);
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  Position pos;
  std::size_t i = 0;
  auto advance = [&] {
    if (src[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
    ++i;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    Token t{Tok::End, "", pos, i, i};
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::Int;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) advance();
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      t.kind = Tok::Ident;
      while (i < src.size() && std::isalnum(static_cast<unsigned char>(src[i]))) advance();
    } else if (c == '=' && i + 1 < src.size() && src[i + 1] == '=') {
      t.kind = Tok::EqEq;
      advance();
      advance();
    } else {
      switch (c) {
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '*': t.kind = Tok::Star; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case ',': t.kind = Tok::Comma; break;
        default: parse_error(pos, std::string("unexpected character '") + c + "'");
      }
      advance();
    }
    t.end = i;
    t.text = std::string(src.substr(t.begin, t.end - t.begin));
    out.push_back(std::move(t));
  }
  out.push_back({Tok::End, "", pos, src.size(), src.size()});
  return out;
}

bool is_ctor(const std::string& s) {
  return s == "P" || s == "Gr" || s == "H" || s == "F1" || s == "F2" || s == "SumEven";
}

std::size_t arity(const std::string& s) { return s == "Gr" || s == "H" ? 2 : 1; }

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  std::unique_ptr<Node> parse_all() {
    auto e = expr();
    if (peek().kind != Tok::End) parse_error(peek().pos, "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& take() { return toks_[i_++]; }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind)
      parse_error(peek().pos, std::string("expected ") + what + ", found " +
                                  (peek().kind == Tok::End ? std::string("end of input") : "'" + peek().text + "'"));
    return take();
  }

  static std::unique_ptr<Node> binary(Node::Kind kind, std::unique_ptr<Node> l, std::unique_ptr<Node> r) {
    auto n = std::make_unique<Node>();
    n->kind = kind;
    n->pos = l->pos;
    n->begin = l->begin;
    n->end = r->end;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
  }

  std::unique_ptr<Node> expr() {
    auto l = sum();
    if (peek().kind == Tok::EqEq) {
      take();
      l = binary(Node::Kind::Eq, std::move(l), sum());
    }
    return l;
  }

  std::unique_ptr<Node> sum() {
    auto l = prod();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      const auto kind = take().kind == Tok::Plus ? Node::Kind::Add : Node::Kind::Sub;
      l = binary(kind, std::move(l), prod());
    }
    return l;
  }

  std::unique_ptr<Node> prod() {
    auto l = atom();
    for (;;) {
      if (peek().kind == Tok::Star) {
        take();
        l = binary(Node::Kind::Mul, std::move(l), atom());
      } else if (peek().kind == Tok::Ident && peek().text == "div") {
        take();
        l = binary(Node::Kind::Div, std::move(l), atom());
      } else {
        return l;
      }
    }
  }

  std::unique_ptr<Node> atom() {
    const Token& t = peek();
    auto n = std::make_unique<Node>();
    n->pos = t.pos;
    n->begin = t.begin;
    if (t.kind == Tok::Int) {
      take();
      n->kind = Node::Kind::Integer;
      n->value = mpz_class(t.text);
      n->end = t.end;
      return n;
    }
    if (t.kind == Tok::LParen) {
      take();
      auto inner = expr();
      const Token& close = expect(Tok::RParen, "')'");
      inner->begin = t.begin;
      inner->end = close.end;
      inner->pos = t.pos;
      return inner;
    }
    if (t.kind == Tok::Ident && t.text == "L") {
      take();
      n->kind = Node::Kind::Lefschetz;
      n->end = t.end;
      return n;
    }
    if (t.kind == Tok::Ident && is_ctor(t.text)) {
      take();
      n->kind = Node::Kind::Call;
      n->name = t.text;
      expect(Tok::LParen, "'('");
      for (;;) {
        const Token& arg = expect(Tok::Int, "an integer argument");
        n->args.emplace_back(arg.text);
        if (peek().kind != Tok::Comma) break;
        take();
      }
      n->end = expect(Tok::RParen, "')'").end;
      if (n->args.size() != arity(n->name))
        parse_error(t.pos, n->name + " takes " + std::to_string(arity(n->name)) + " argument(s), got " +
                               std::to_string(n->args.size()));
      return n;
    }
    if (t.kind == Tok::End) parse_error(t.pos, "unexpected end of input");
    parse_error(t.pos, "unexpected '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

std::string snippet(const Node& n, std::string_view src) {
  return std::string(src.substr(n.begin, n.end - n.begin));
}

[[noreturn]] void eval_error(const Node& n, std::string_view src, const std::string& msg) {
  throw Error(ErrorKind::EvalError, msg + " in '" + snippet(n, src) + "' at " + where(n.pos));
}

LPoly call(const Node& n, std::string_view src) {
  auto arg = [&](std::size_t i, long lo, long hi) {
    const mpz_class& a = n.args[i];
    if (a < lo || a > hi)
      eval_error(n, src, n.name + " argument " + a.get_str() + " outside [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]");
    return static_cast<int>(a.get_si());
  };
  constexpr long kMaxN = 1024;
  try {
    if (n.name == "P") return projective_class(static_cast<unsigned>(arg(0, 0, kMaxN)));
    if (n.name == "SumEven") return sum_even_powers(arg(0, 2, kMaxN));
    if (n.name == "F1") return fiber_classes(arg(0, 4, kMaxN)).f1;
    if (n.name == "F2") return fiber_classes(arg(0, 4, kMaxN)).f2;
    arg(0, 2, 2);
    if (n.name == "Gr") return grassmannian_class(arg(1, 4, kMaxN));
    return hyperplane_section_class(arg(1, 4, kMaxN));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::EvalError) throw;
    eval_error(n, src, e.what());
  }
}

}  // namespace

std::unique_ptr<Node> parse(std::string_view source) { return Parser(source).parse_all(); }

Value evaluate(const Node& n, std::string_view src) {
  using K = Node::Kind;
  switch (n.kind) {
    case K::Integer: return LPoly::constant(n.value);
    case K::Lefschetz: return LPoly::monomial(1);
    case K::Call: return call(n, src);
    default: break;
  }
  const Value l = evaluate(*n.lhs, src);
  const Value r = evaluate(*n.rhs, src);
  const auto* a = std::get_if<LPoly>(&l);
  const auto* b = std::get_if<LPoly>(&r);
  if (!a || !b) eval_error(n, src, "operands must be classes, not booleans");
  switch (n.kind) {
    case K::Add: return *a + *b;
    case K::Sub: return *a - *b;
    case K::Mul: return *a * *b;
    case K::Eq: return *a == *b;
    case K::Div:
      try {
        return div_exact(*a, *b);
      } catch (const Error& e) {
        eval_error(n, src, e.kind() == ErrorKind::NonExactDivision ? "non-exact division" : e.what());
      }
    default: break;
  }
  eval_error(n, src, "unknown node");
}

Value eval(std::string_view source) { return evaluate(*parse(source), source); }

std::string to_string(const Value& v) {
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return std::get<LPoly>(v).to_string();
}

}  // namespace pfgr::dsl
