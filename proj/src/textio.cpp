#include "witt/textio.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace witt {

// ---------------------------------------------------------------- printing

static void append_coeff_word(std::string& out, const Int& c, bool first,
                              const std::string& body, bool body_is_one) {
  Int a = abs(c);
  bool neg = sgn(c) < 0;
  if (first) {
    if (neg) out += "-";
  } else {
    out += neg ? " - " : " + ";
  }
  if (body_is_one) {
    out += a.get_str();
  } else {
    if (a != 1) {
      out += a.get_str();
      out += "*";
    }
    out += body;
  }
}

std::string to_string(const NcPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    std::string body;
    for (auto letter : w) {
      if (!body.empty()) body += "*";
      body += f.algebra()->name(VarId{letter});
    }
    append_coeff_word(out, c, first, body, w.empty());
    first = false;
  }
  return out;
}

std::string to_string(const CPoly& g) {
  if (g.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : g.terms()) {
    std::string body;
    bool trivial = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      trivial = false;
      if (!body.empty()) body += "*";
      body += g.algebra()->name(VarId{static_cast<std::uint8_t>(i)});
      if (e[i] > 1) {
        body += "^";
        body += std::to_string(e[i]);
      }
    }
    append_coeff_word(out, c, first, body, trivial);
    first = false;
  }
  return out;
}

std::string to_string(const NecklacePoly& g) {
  if (g.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : g.terms()) {
    std::string body = "[";
    if (w.empty()) {
      body += "1";
    } else {
      for (auto letter : w) body += g.algebra()->name(VarId{letter});
    }
    body += "]";
    append_coeff_word(out, c, first, body, false);
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const NcPoly& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const CPoly& g) { return os << to_string(g); }
std::ostream& operator<<(std::ostream& os, const NecklacePoly& g) {
  return os << to_string(g);
}

// ----------------------------------------------------------------- lexing

namespace {

struct Token {
  enum Kind { ident, integer, plus, minus, star, caret, lparen, rparen, end };
  Kind kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws();
      if (i_ >= s_.size()) break;
      char c = s_[i_];
      std::size_t start = i_;
      if (std::isupper(static_cast<unsigned char>(c))) {
        std::string t;
        while (i_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
          t += s_[i_++];
        out.push_back({Token::ident, std::move(t), start});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string t;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
          t += s_[i_++];
        out.push_back({Token::integer, std::move(t), start});
      } else {
        Token::Kind k;
        switch (c) {
          case '+': k = Token::plus; break;
          case '-': k = Token::minus; break;
          case '*': k = Token::star; break;
          case '^': k = Token::caret; break;
          case '(': k = Token::lparen; break;
          case ')': k = Token::rparen; break;
          default:
            throw parse_error(std::string("unexpected character '") + c + "'", start);
        }
        ++i_;
        out.push_back({k, std::string(1, c), start});
      }
    }
    out.push_back({Token::end, "", s_.size()});
    return out;
  }

 private:
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  std::string_view s_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, AlgebraPtr alg)
      : toks_(Lexer(text).run()), alg_(std::move(alg)) {}

  NcPoly parse_poly_all() {
    NcPoly f = parse_poly();
    expect_end();
    return f;
  }

  FormalXElement parse_formal_all() {
    FormalXElement e;
    int sign = leading_sign();
    parse_formal_term(e, sign);
    while (peek().kind == Token::plus || peek().kind == Token::minus) {
      int s = next().kind == Token::plus ? 1 : -1;
      parse_formal_term(e, s);
    }
    expect_end();
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  void expect_end() {
    if (peek().kind != Token::end)
      throw parse_error("unexpected trailing input", peek().pos);
  }

  int leading_sign() {
    if (peek().kind == Token::plus) {
      next();
      return 1;
    }
    if (peek().kind == Token::minus) {
      next();
      return -1;
    }
    return 1;
  }

  NcPoly parse_poly() {
    std::vector<NcPoly::Term> buf;
    int sign = leading_sign();
    parse_term(buf, sign);
    while (peek().kind == Token::plus || peek().kind == Token::minus) {
      int s = next().kind == Token::plus ? 1 : -1;
      parse_term(buf, s);
    }
    return NcPoly::from_terms(alg_, std::move(buf));
  }

  // term := integer | [integer '*'] factor ('*' factor)*
  void parse_term(std::vector<NcPoly::Term>& buf, int sign) {
    Int coeff = sign;
    bool saw_coeff = false;
    if (peek().kind == Token::integer) {
      const Token& t = next();
      coeff *= Int(t.text);
      saw_coeff = true;
      if (peek().kind != Token::star) {
        buf.emplace_back(Word{}, std::move(coeff));  // bare constant
        return;
      }
      next();  // consume '*'
    }
    Word w;
    parse_factor(w);
    while (peek().kind == Token::star) {
      next();
      parse_factor(w);
    }
    (void)saw_coeff;
    buf.emplace_back(std::move(w), std::move(coeff));
  }

  void parse_factor(Word& w) {
    const Token& t = peek();
    if (t.kind != Token::ident)
      throw parse_error("expected a variable name", t.pos);
    next();
    auto v = alg_->find(t.text);
    if (!v) throw parse_error("unknown variable '" + t.text + "'", t.pos);
    unsigned long e = 1;
    if (peek().kind == Token::caret) {
      next();
      const Token& et = peek();
      if (et.kind != Token::integer)
        throw parse_error("expected an exponent after '^'", et.pos);
      next();
      try {
        e = std::stoul(et.text);
      } catch (...) {
        throw parse_error("exponent out of range", et.pos);
      }
      if (e == 0) throw parse_error("exponent must be positive", et.pos);
      if (e > 65535) throw parse_error("exponent too large", et.pos);
    }
    for (unsigned long k = 0; k < e; ++k) w.push_back(v->index);
  }

  // fterm := [integer ['*']] ['V' '^' integer] 'T' '(' poly ')'
  void parse_formal_term(FormalXElement& e, int sign) {
    Int coeff = sign;
    if (peek().kind == Token::integer) {
      coeff *= Int(next().text);
      if (peek().kind == Token::star) next();
    }
    unsigned shift = 0;
    if (peek().kind == Token::ident && peek().text == "V") {
      next();
      if (peek().kind != Token::caret)
        throw parse_error("expected '^' after 'V'", peek().pos);
      next();
      if (peek().kind != Token::integer)
        throw parse_error("expected a shift amount after 'V^'", peek().pos);
      const Token& st = next();
      try {
        shift = static_cast<unsigned>(std::stoul(st.text));
      } catch (...) {
        throw parse_error("shift out of range", st.pos);
      }
    }
    if (!(peek().kind == Token::ident && peek().text == "T"))
      throw parse_error("expected 'T(...)'", peek().pos);
    next();
    if (peek().kind != Token::lparen)
      throw parse_error("expected '(' after 'T'", peek().pos);
    next();
    NcPoly base = parse_poly();
    if (peek().kind != Token::rparen)
      throw parse_error("expected ')'", peek().pos);
    next();
    e.add_term(std::move(coeff), shift, std::move(base));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  AlgebraPtr alg_;
};

}  // namespace

NcPoly parse_ncpoly(std::string_view text, AlgebraPtr alg) {
  if (!alg) throw usage_error("parse_ncpoly: null context");
  return Parser(text, std::move(alg)).parse_poly_all();
}

FormalXElement parse_formal(std::string_view text, AlgebraPtr alg) {
  if (!alg) throw usage_error("parse_formal: null context");
  return Parser(text, std::move(alg)).parse_formal_all();
}

std::vector<std::string> scan_variable_names(std::string_view text) {
  std::vector<Token> toks = Lexer(text).run();
  std::vector<std::string> names;
  for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
    if (toks[i].kind != Token::ident) continue;
    if (toks[i + 1].kind == Token::lparen) continue;  // formal marker 'T'
    if (toks[i].text == "V" && toks[i + 1].kind == Token::caret) continue;
    if (std::find(names.begin(), names.end(), toks[i].text) == names.end())
      names.push_back(toks[i].text);
  }
  return names;
}

}  // namespace witt
