#include <radocert/syntax.hpp>

#include <radocert/errors.hpp>

#include <algorithm>
#include <cctype>
#include <set>

namespace radocert {

namespace {

struct Token {
  enum Kind { Number, Code, Ident, Plus, Minus, Star, Caret, LParen, RParen, Slash, End };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s)
{
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::Number, s.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Token::Ident, s.substr(start, i - start), start});
      continue;
    }
    if (c == '{') {
      ++i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == start + 1 || i >= s.size() || s[i] != '}')
        throw ParseError("malformed field literal, expected {digits}", s, start);
      out.push_back({Token::Code, s.substr(start + 1, i - start - 1), start});
      ++i;
      continue;
    }
    Token::Kind kind;
    switch (c) {
      case '+': kind = Token::Plus; break;
      case '-': kind = Token::Minus; break;
      case '*': kind = Token::Star; break;
      case '^': kind = Token::Caret; break;
      case '(': kind = Token::LParen; break;
      case ')': kind = Token::RParen; break;
      case '/': kind = Token::Slash; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", s, start);
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(const Domain& domain, const std::string& text, std::vector<Token> tokens,
         std::vector<std::string> variables)
      : domain_(domain), text_(text), tokens_(std::move(tokens)), vars_(std::move(variables))
  {
  }

  MultiPoly parse_all()
  {
    MultiPoly p = expr();
    if (peek().kind != Token::End) fail("unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const
  {
    throw ParseError(msg, text_, peek().pos);
  }

  MultiPoly expr()
  {
    MultiPoly acc = term();
    while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
      const bool minus = next().kind == Token::Minus;
      MultiPoly rhs = term();
      if (minus)
        acc -= rhs;
      else
        acc += rhs;
    }
    return acc;
  }

  MultiPoly term()
  {
    MultiPoly acc = factor();
    while (peek().kind == Token::Star) {
      next();
      acc = acc * factor();
    }
    return acc;
  }

  MultiPoly factor()
  {
    if (peek().kind == Token::Minus) {
      next();
      return -factor();
    }
    MultiPoly base = atom();
    if (peek().kind == Token::Caret) {
      next();
      if (peek().kind != Token::Number) fail("exponent must be a non-negative integer");
      const Token& t = next();
      if (t.text.size() > 5 || std::stoul(t.text) > 10000)
        throw ParseError("exponent too large", text_, t.pos);
      base = base.pow(static_cast<unsigned>(std::stoul(t.text)));
    }
    return base;
  }

  MultiPoly atom()
  {
    const std::size_t n = vars_.size();
    const Token& t = peek();
    switch (t.kind) {
      case Token::Number:
        next();
        return MultiPoly::constant(domain_, n, domain_.from_integer(Integer(t.text)));
      case Token::Code: {
        next();
        if (domain_.is_integers())
          throw ParseError("field literals {c} are only valid over GF(q)[t]", text_, t.pos);
        if (t.text.size() > 10 || std::stoull(t.text) >= domain_.q())
          throw ParseError("field code out of range for " + domain_.name(), text_, t.pos);
        return MultiPoly::constant(
            domain_, n, domain_.from_field_code(static_cast<FiniteField::Code>(std::stoull(t.text))));
      }
      case Token::Ident: {
        next();
        if (!domain_.is_integers() && t.text == "t")
          return MultiPoly::constant(domain_, n, domain_.indeterminate());
        auto it = std::find(vars_.begin(), vars_.end(), t.text);
        if (it == vars_.end()) throw ParseError("unknown variable '" + t.text + "'", text_, t.pos);
        return MultiPoly::variable(domain_, n, static_cast<std::size_t>(it - vars_.begin()));
      }
      case Token::LParen: {
        next();
        MultiPoly inner = expr();
        if (peek().kind != Token::RParen) fail("expected ')'");
        next();
        return inner;
      }
      case Token::End:
        fail("unexpected end of input");
      default:
        fail("unexpected '" + t.text + "'");
    }
  }

  const Domain& domain_;
  const std::string& text_;
  std::vector<Token> tokens_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

std::pair<std::string, std::string> split_name(const std::string& s)
{
  std::size_t i = s.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
  return {s.substr(0, i), s.substr(i)};
}

}  // namespace

bool natural_less(const std::string& a, const std::string& b)
{
  auto [pa, na] = split_name(a);
  auto [pb, nb] = split_name(b);
  if (pa != pb) return pa < pb;
  // compare numeric suffixes by value, then by text for leading zeros
  auto strip = [](const std::string& s) {
    const auto k = s.find_first_not_of('0');
    return k == std::string::npos ? std::string() : s.substr(k);
  };
  const std::string sa = strip(na), sb = strip(nb);
  if (sa.size() != sb.size()) return sa.size() < sb.size();
  if (sa != sb) return sa < sb;
  return na < nb;
}

NamedPoly parse_polynomial(const Domain& domain, const std::string& text,
                           const std::vector<std::string>& variables)
{
  auto tokens = tokenize(text);
  for (const auto& t : tokens)
    if (t.kind == Token::Slash) throw ParseError("division is not allowed in a polynomial", text, t.pos);
  std::vector<std::string> vars = variables;
  if (vars.empty()) {
    std::set<std::string> seen;
    for (const auto& t : tokens) {
      if (t.kind != Token::Ident) continue;
      if (!domain.is_integers() && t.text == "t") continue;
      seen.insert(t.text);
    }
    vars.assign(seen.begin(), seen.end());
    std::sort(vars.begin(), vars.end(), natural_less);
  } else {
    std::set<std::string> unique(vars.begin(), vars.end());
    if (unique.size() != vars.size()) throw ParseError("duplicate variable name", text, 0);
    if (!domain.is_integers() && unique.count("t"))
      throw ParseError("'t' is the ring indeterminate and cannot be a variable", text, 0);
  }
  if (vars.empty()) throw ParseError("polynomial has no variables", text, 0);
  Parser parser(domain, text, std::move(tokens), vars);
  MultiPoly p = parser.parse_all();
  return {std::move(p), std::move(vars)};
}

Element parse_element(const Domain& domain, const std::string& text)
{
  auto tokens = tokenize(text);
  for (const auto& t : tokens) {
    if (t.kind == Token::Slash) throw ParseError("'/' is not allowed in a ring element", text, t.pos);
    if (t.kind == Token::Ident && (domain.is_integers() || t.text != "t"))
      throw ParseError("unexpected identifier '" + t.text + "' in a ring element", text, t.pos);
  }
  Parser parser(domain, text, std::move(tokens), {});
  MultiPoly p = parser.parse_all();
  return p.coefficient({});
}

Fraction parse_fraction(const Domain& domain, const std::string& text)
{
  // split at the single top-level '/'
  int depth = 0;
  std::size_t slash = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '/' && depth == 0) {
      if (slash != std::string::npos) throw ParseError("more than one '/'", text, i);
      slash = i;
    }
  }
  if (slash == std::string::npos) return domain.embed(parse_element(domain, text));
  const std::string num_text = text.substr(0, slash);
  const std::string den_text = text.substr(slash + 1);
  Element num, den;
  try {
    num = parse_element(domain, num_text);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), text, e.position());
  }
  try {
    den = parse_element(domain, den_text);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), text, slash + 1 + e.position());
  }
  if (domain.is_zero(den)) throw ParseError("zero denominator", text, slash + 1);
  return domain.fraction(num, den);
}

}  // namespace radocert
