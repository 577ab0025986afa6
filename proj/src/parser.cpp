#include "nilcenter/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace nilcenter {

namespace {

enum class Tok { Ident, Int, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equal, Semi, Comma, Less, Greater, NotEqual, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

std::vector<Token> tokenize(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int l = line, cc = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, src.substr(i, j - i), l, cc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, src.substr(i, j - i), l, cc});
      advance(j - i);
      continue;
    }
    Tok kind;
    std::size_t len = 1;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '=': kind = Tok::Equal; break;
      case ';': kind = Tok::Semi; break;
      case ',': kind = Tok::Comma; break;
      case '<': kind = Tok::Less; break;
      case '>': kind = Tok::Greater; break;
      case '!':
        if (i + 1 < src.size() && src[i + 1] == '=') {
          kind = Tok::NotEqual;
          len = 2;
          break;
        }
        [[fallthrough]];
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", l, cc);
    }
    out.push_back({kind, src.substr(i, len), l, cc});
    advance(len);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Equal: return "'='";
    case Tok::Semi: return "';'";
    case Tok::Comma: return "','";
    case Tok::Less: return "'<'";
    case Tok::Greater: return "'>'";
    case Tok::NotEqual: return "'!='";
    case Tok::End: return "end of input";
  }
  return "token";
}

constexpr int kMaxExponent = 64;

class Parser {
 public:
  Parser(const std::string& src, bool allow_vars) : toks_(tokenize(src)), allow_vars_(allow_vars) {}

  void declare(const std::vector<std::string>& params) {
    for (const auto& p : params) params_.insert(p);
  }

  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok t) const { return peek().kind == t; }
  bool at_ident(const char* word) const { return at(Tok::Ident) && peek().text == word; }
  const Token& next() { return toks_[pos_++]; }

  const Token& expect(Tok t, const std::string& context) {
    if (!at(t))
      throw ParseError(std::string("expected ") + describe(t) + " " + context + ", found " + found(), peek().line,
                       peek().col);
    return next();
  }

  std::string found() const {
    const Token& t = peek();
    return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().line, peek().col); }

  Poly3 expr() {
    Poly3 acc = term();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      const bool minus = next().kind == Tok::Minus;
      Poly3 t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  Poly3 term() {
    Poly3 acc = unary();
    while (at(Tok::Star) || at(Tok::Slash)) {
      const Token op = next();
      Poly3 rhs = unary();
      if (op.kind == Tok::Star) {
        acc = acc * rhs;
      } else {
        if (rhs.degree() > 0) throw ParseError("division by an expression containing x, y or z", op.line, op.col);
        const Coef d = rhs.coeff({0, 0, 0});
        if (d.is_zero()) throw ParseError("division by zero", op.line, op.col);
        acc = acc.scaled(d.inverse());
      }
    }
    return acc;
  }

  Poly3 unary() {
    if (at(Tok::Minus)) {
      next();
      return -unary();
    }
    if (at(Tok::Plus)) {
      next();
      return unary();
    }
    return power();
  }

  Poly3 power() {
    Poly3 base = atom();
    if (at(Tok::Caret)) {
      next();
      const Token& t = peek();
      if (!at(Tok::Int)) fail("exponent must be a non-negative integer, found " + found());
      next();
      if (t.text.size() > 3 || std::stoi(t.text) > kMaxExponent)
        throw ParseError("exponent " + t.text + " too large", t.line, t.col);
      const int e = std::stoi(t.text);
      Poly3 r(Coef(1));
      for (int k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  Poly3 atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int:
        next();
        return Poly3(Coef(mpq_class(mpz_class(t.text))));
      case Tok::Ident: {
        next();
        if (t.text == "x" || t.text == "y" || t.text == "z") {
          if (!allow_vars_) throw ParseError("variable '" + t.text + "' not allowed here", t.line, t.col);
          return Poly3::variable(t.text == "x" ? 0 : t.text == "y" ? 1 : 2);
        }
        if (!params_.count(t.text))
          throw ParseError("undeclared identifier '" + t.text + "' (declare it in the params line)", t.line, t.col);
        return Poly3(Coef::symbol(t.text));
      }
      case Tok::LParen: {
        next();
        Poly3 e = expr();
        expect(Tok::RParen, "to close parenthesis");
        return e;
      }
      default:
        fail("expected an expression, found " + found());
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  bool allow_vars_;
  std::set<std::string> params_;
};

bool reserved(const std::string& s) {
  return s == "x" || s == "y" || s == "z" || s == "dx" || s == "dy" || s == "dz" || s == "params" || s == "order";
}

}  // namespace

SystemModel parse_system(const std::string& text) {
  Parser p(text, true);
  std::vector<std::string> params;
  std::optional<int> order;
  if (p.at_ident("params")) {
    p.next();
    do {
      const Token& t = p.peek();
      if (!p.at(Tok::Ident)) p.fail("expected a parameter name, found " + p.found());
      p.next();
      if (reserved(t.text)) throw ParseError("'" + t.text + "' is reserved and cannot be a parameter", t.line, t.col);
      if (std::find(params.begin(), params.end(), t.text) != params.end())
        throw ParseError("parameter '" + t.text + "' declared twice", t.line, t.col);
      params.push_back(t.text);
    } while (p.at(Tok::Comma) && (p.next(), true));
    p.expect(Tok::Semi, "after the params list");
  }
  if (p.at_ident("order")) {
    p.next();
    const Token& t = p.peek();
    if (!p.at(Tok::Int)) p.fail("expected the jet order, found " + p.found());
    p.next();
    if (t.text.size() > 4) throw ParseError("order too large", t.line, t.col);
    order = std::stoi(t.text);
    if (*order < 2) throw ParseError("order must be at least 2", t.line, t.col);
    p.expect(Tok::Semi, "after the order");
  }
  p.declare(params);

  std::array<std::optional<Poly3>, 3> eq;
  for (int k = 0; k < 3; ++k) {
    const Token& t = p.peek();
    int idx = -1;
    if (p.at(Tok::Ident)) idx = t.text == "dx" ? 0 : t.text == "dy" ? 1 : t.text == "dz" ? 2 : -1;
    if (idx < 0) p.fail("expected dx, dy or dz, found " + p.found());
    if (eq[idx]) throw ParseError("equation " + t.text + " given twice", t.line, t.col);
    p.next();
    p.expect(Tok::Equal, "after " + t.text);
    eq[idx] = p.expr();
    p.expect(Tok::Semi, "at the end of the equation");
  }
  if (!p.at(Tok::End)) p.fail("unexpected " + p.found() + " after the three equations");

  const bool exact = !order.has_value();
  return make_system({*eq[0], *eq[1], *eq[2]}, params, order.value_or(12), exact);
}

SystemModel load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_system(ss.str());
}

std::string print_system(const SystemModel& s) {
  std::ostringstream os;
  if (!s.params.empty()) {
    os << "params ";
    for (std::size_t i = 0; i < s.params.size(); ++i) os << (i ? ", " : "") << s.params[i];
    os << ";\n";
  }
  if (!s.exact) os << "order " << s.order << ";\n";
  const auto f = s.field();
  os << "dx = " << f[0].to_string() << ";\n";
  os << "dy = " << f[1].to_string() << ";\n";
  os << "dz = " << f[2].to_string() << ";\n";
  return os.str();
}

Poly3 parse_polynomial(const std::string& text, const std::vector<std::string>& params) {
  Parser p(text, true);
  p.declare(params);
  Poly3 e = p.expr();
  if (!p.at(Tok::End)) p.fail("unexpected " + p.found());
  return e;
}

Coef parse_coefficient(const std::string& text, const std::vector<std::string>& params) {
  Parser p(text, false);
  p.declare(params);
  Poly3 e = p.expr();
  if (!p.at(Tok::End)) p.fail("unexpected " + p.found());
  return e.coeff({0, 0, 0});
}

SideCondition parse_assumption(const std::string& text, const std::vector<std::string>& params) {
  Parser p(text, false);
  p.declare(params);
  Poly3 e = p.expr();
  Relation rel;
  if (p.at(Tok::Less))
    rel = Relation::Negative;
  else if (p.at(Tok::Greater))
    rel = Relation::Positive;
  else if (p.at(Tok::NotEqual))
    rel = Relation::NonZero;
  else
    p.fail("expected '<0', '>0' or '!=0', found " + p.found());
  p.next();
  const Token& zero = p.peek();
  if (!p.at(Tok::Int) || zero.text.find_first_not_of('0') != std::string::npos)
    p.fail("assumptions compare against 0, found " + p.found());
  p.next();
  if (!p.at(Tok::End)) p.fail("unexpected " + p.found());
  return {e.coeff({0, 0, 0}), rel, "assumption"};
}

std::map<std::string, Coef> parse_assignments(const std::string& text, const std::vector<std::string>& params) {
  std::map<std::string, Coef> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected name=value in '" + item + "'", 1, 1);
    std::string name = item.substr(0, eq);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (std::find(params.begin(), params.end(), name) == params.end())
      throw ParseError("unknown parameter '" + name + "'", 1, 1);
    out[name] = parse_coefficient(item.substr(eq + 1), params);
  }
  return out;
}

}  // namespace nilcenter
