/*
   Copyright 2026 The lad authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Parser for the fixture language. Line-oriented; `#` starts a comment.
//
//   field 2
//   ring S vars x y w s mod (s^6, y^3 + x^2)
//   endo psi on S : x -> x^3 + s^3, y -> y^3, w -> w^5 + x^2, s -> x*s^2
//   ring R vars y
//   endo phi on R : y -> y^3
//   map f : R -> S : y -> y
//   assume flat f
//   assume cm S
//
// Polynomials use explicit `*`, `^` with nonnegative integer exponents, and
// integer coefficients reduced mod p; `a - b` is sugar for `a + (p-1)*b`.

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lad/polynomial.hpp"

namespace lad {

struct RingDecl {
  std::string name;
  RingPtr ambient;
  std::vector<Polynomial> defining;
  std::size_t line = 0;
};

struct EndoDecl {
  std::string name;
  std::string ring;
  std::vector<Polynomial> images;  // one per ring variable, in order
  std::size_t line = 0;
};

struct MapDecl {
  std::string name;
  std::string source, target;
  std::vector<Polynomial> images;  // one per source variable, in order
  std::size_t line = 0;
};

struct Fixture {
  std::uint32_t p = 0;  // 0 until a field statement is seen
  std::vector<RingDecl> rings;
  std::vector<EndoDecl> endos;
  std::vector<MapDecl> maps;
  std::vector<std::pair<std::string, std::string>> assumptions;  // kind, name

  const RingDecl* find_ring(std::string_view name) const {
    for (const RingDecl& r : rings)
      if (r.name == name) return &r;
    return nullptr;
  }
  const EndoDecl* find_endo(std::string_view name) const {
    for (const EndoDecl& e : endos)
      if (e.name == name) return &e;
    return nullptr;
  }
  const MapDecl* find_map(std::string_view name) const {
    for (const MapDecl& m : maps)
      if (m.name == name) return &m;
    return nullptr;
  }
  bool assumed(std::string_view kind, std::string_view name) const {
    for (const auto& [k, n] : assumptions)
      if (k == kind && n == name) return true;
    return false;
  }
};

namespace dsl_detail {

struct Token {
  enum class Kind { name, integer, symbol, end };
  Kind kind = Kind::end;
  std::string text;
  std::size_t column = 0;  // 1-based
};

// Tokenizes one line. Symbols: ( ) , : + - * ^ and the arrow ->.
inline std::vector<Token> tokenize(std::string_view line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t col = i + 1;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) ||
              line[j] == '_'))
        ++j;
      out.push_back({Token::Kind::name, std::string(line.substr(i, j - i)),
                     col});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() &&
             std::isdigit(static_cast<unsigned char>(line[j])))
        ++j;
      out.push_back({Token::Kind::integer, std::string(line.substr(i, j - i)),
                     col});
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Token::Kind::symbol, "->", col});
      i += 2;
      continue;
    }
    if (std::string_view("(),:+-*^").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::symbol, std::string(1, c), col});
      ++i;
      continue;
    }
    throw SyntaxError("unexpected character '" + std::string(1, c) + "'",
                      lineno, col);
  }
  out.push_back({Token::Kind::end, "", line.size() + 1});
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t lineno)
      : toks_(std::move(tokens)), line_(lineno) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_end() const { return peek().kind == Token::Kind::end; }

  Token next() {
    Token t = toks_[pos_];
    if (t.kind != Token::Kind::end) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg, line_, peek().column);
  }
  [[noreturn]] void fail_semantic(const std::string& msg) const {
    throw SemanticError(msg, line_, peek().column);
  }

  std::string expect_name(const std::string& what) {
    if (peek().kind != Token::Kind::name)
      fail("expected " + what + ", got '" + shown(peek()) + "'");
    return next().text;
  }
  std::uint64_t expect_integer(const std::string& what) {
    if (peek().kind != Token::Kind::integer)
      fail("expected " + what + ", got '" + shown(peek()) + "'");
    const Token t = next();
    if (t.text.size() > 19)
      throw SyntaxError("integer literal too large", line_, t.column);
    return std::stoull(t.text);
  }
  void expect_symbol(const std::string& sym) {
    if (peek().kind != Token::Kind::symbol || peek().text != sym)
      fail("expected '" + sym + "', got '" + shown(peek()) + "'");
    next();
  }
  bool accept_symbol(const std::string& sym) {
    if (peek().kind == Token::Kind::symbol && peek().text == sym) {
      next();
      return true;
    }
    return false;
  }
  bool accept_name(const std::string& word) {
    if (peek().kind == Token::Kind::name && peek().text == word) {
      next();
      return true;
    }
    return false;
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing '" + shown(peek()) + "'");
  }

  static std::string shown(const Token& t) {
    return t.kind == Token::Kind::end ? "end of line" : t.text;
  }

  std::size_t line() const { return line_; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

// poly   := term (('+' | '-') term)*
// term   := factor ('*' factor)*
// factor := base ('^' INT)?
// base   := INT | VAR | '(' poly ')' | '-' base
class PolyParser {
 public:
  PolyParser(LineParser& lp, const RingPtr& ring) : lp_(lp), ring_(ring) {}

  Polynomial parse() {
    Polynomial acc = parse_term();
    while (true) {
      if (lp_.accept_symbol("+"))
        acc = acc + parse_term();
      else if (lp_.accept_symbol("-"))
        acc = acc - parse_term();
      else
        return acc;
    }
  }

 private:
  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (lp_.accept_symbol("*")) acc = acc * parse_factor();
    return acc;
  }

  Polynomial parse_factor() {
    Polynomial base = parse_base();
    if (lp_.accept_symbol("^")) {
      std::uint64_t e = lp_.expect_integer("exponent");
      if (e > 0xffffffffull)
        throw SyntaxError("exponent too large", lp_.line(),
                          lp_.peek().column);
      return base.pow(static_cast<std::uint32_t>(e));
    }
    return base;
  }

  Polynomial parse_base() {
    const Token& t = lp_.peek();
    if (t.kind == Token::Kind::integer) {
      std::uint64_t v = lp_.expect_integer("integer");
      return Polynomial::constant(
          ring_, ring_->field.reduce(static_cast<std::int64_t>(
                     v % ring_->field.modulus())));
    }
    if (t.kind == Token::Kind::name) {
      auto idx = ring_->var_index(t.text);
      if (!idx)
        lp_.fail_semantic("'" + t.text +
                          "' is not a variable of the current ring");
      lp_.next();
      return Polynomial::variable(ring_, *idx);
    }
    if (lp_.accept_symbol("(")) {
      Polynomial inner = parse();
      lp_.expect_symbol(")");
      return inner;
    }
    if (lp_.accept_symbol("-")) return parse_base().negated();
    lp_.fail("expected a polynomial, got '" + LineParser::shown(t) + "'");
  }

  LineParser& lp_;
  RingPtr ring_;
};

inline std::vector<Polynomial> parse_poly_list(LineParser& lp,
                                               const RingPtr& ring) {
  std::vector<Polynomial> out;
  lp.expect_symbol("(");
  if (!lp.accept_symbol(")")) {
    out.push_back(PolyParser(lp, ring).parse());
    while (lp.accept_symbol(",")) out.push_back(PolyParser(lp, ring).parse());
    lp.expect_symbol(")");
  }
  return out;
}

// `v -> poly, v -> poly, ...` covering every ring variable exactly once.
inline std::vector<Polynomial> parse_image_list(LineParser& lp,
                                                const RingPtr& ring) {
  std::vector<std::optional<Polynomial>> slots(ring->nvars());
  do {
    const Token var_tok = lp.peek();
    std::string var = lp.expect_name("variable name");
    auto idx = ring->var_index(var);
    if (!idx)
      throw SemanticError("'" + var + "' is not a variable of the ring",
                          lp.line(), var_tok.column);
    if (slots[*idx])
      throw SemanticError("duplicate image for variable '" + var + "'",
                          lp.line(), var_tok.column);
    lp.expect_symbol("->");
    slots[*idx] = PolyParser(lp, ring).parse();
  } while (lp.accept_symbol(","));
  for (std::size_t i = 0; i < slots.size(); ++i)
    if (!slots[i])
      throw SemanticError("no image given for variable '" + ring->vars[i] +
                              "'",
                          lp.line(), 1);
  std::vector<Polynomial> images;
  images.reserve(slots.size());
  for (auto& s : slots) images.push_back(std::move(*s));
  return images;
}

}  // namespace dsl_detail

inline Fixture parse_fixture(std::string_view text) {
  using dsl_detail::LineParser;
  Fixture fx;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = text.substr(
        start, nl == std::string_view::npos ? text.size() - start
                                            : nl - start);
    ++lineno;
    start = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    LineParser lp(dsl_detail::tokenize(line, lineno), lineno);
    if (lp.at_end()) continue;

    if (lp.accept_name("field")) {
      const auto col = lp.peek().column;
      std::uint64_t p = lp.expect_integer("field characteristic");
      lp.expect_end();
      if (fx.p != 0)
        throw SemanticError("field already declared", lineno, col);
      if (p < 2 || p >= (1ull << 31) || !is_prime(static_cast<std::uint32_t>(p)))
        throw SemanticError(std::to_string(p) + " is not prime", lineno, col);
      fx.p = static_cast<std::uint32_t>(p);
      continue;
    }

    if (lp.accept_name("ring")) {
      std::string name = lp.expect_name("ring name");
      if (fx.find_ring(name))
        throw SemanticError("ring '" + name + "' already declared", lineno,
                            1);
      if (fx.p == 0)
        throw SemanticError("no field declared before ring '" + name + "'",
                            lineno, 1);
      if (!lp.accept_name("vars")) lp.fail("expected 'vars'");
      std::vector<std::string> vars;
      while (lp.peek().kind == dsl_detail::Token::Kind::name &&
             lp.peek().text != "mod") {
        const auto col = lp.peek().column;
        std::string v = lp.expect_name("variable");
        for (const std::string& seen : vars)
          if (seen == v)
            throw SemanticError("duplicate variable '" + v + "'", lineno,
                                col);
        vars.push_back(std::move(v));
      }
      if (vars.empty()) lp.fail("expected at least one variable name");
      RingPtr ambient = make_ring(fx.p, vars);
      std::vector<Polynomial> defining;
      if (lp.accept_name("mod"))
        defining = dsl_detail::parse_poly_list(lp, ambient);
      lp.expect_end();
      fx.rings.push_back(
          RingDecl{std::move(name), ambient, std::move(defining), lineno});
      continue;
    }

    if (lp.accept_name("endo")) {
      std::string name = lp.expect_name("endomorphism name");
      if (fx.find_endo(name))
        throw SemanticError("endo '" + name + "' already declared", lineno,
                            1);
      if (!lp.accept_name("on")) lp.fail("expected 'on'");
      const auto ring_col = lp.peek().column;
      std::string ring_name = lp.expect_name("ring name");
      const RingDecl* ring = fx.find_ring(ring_name);
      if (!ring)
        throw SemanticError("undeclared ring '" + ring_name + "'", lineno,
                            ring_col);
      lp.expect_symbol(":");
      std::vector<Polynomial> images =
          dsl_detail::parse_image_list(lp, ring->ambient);
      lp.expect_end();
      fx.endos.push_back(EndoDecl{std::move(name), std::move(ring_name),
                                  std::move(images), lineno});
      continue;
    }

    if (lp.accept_name("map")) {
      std::string name = lp.expect_name("map name");
      if (fx.find_map(name))
        throw SemanticError("map '" + name + "' already declared", lineno, 1);
      lp.expect_symbol(":");
      const auto src_col = lp.peek().column;
      std::string src = lp.expect_name("source ring");
      lp.expect_symbol("->");
      const auto tgt_col = lp.peek().column;
      std::string tgt = lp.expect_name("target ring");
      const RingDecl* source = fx.find_ring(src);
      if (!source)
        throw SemanticError("undeclared ring '" + src + "'", lineno, src_col);
      const RingDecl* target = fx.find_ring(tgt);
      if (!target)
        throw SemanticError("undeclared ring '" + tgt + "'", lineno, tgt_col);
      lp.expect_symbol(":");
      // Images are declared per source variable but live in the target ring:
      // parse names against the source, polynomials against the target.
      std::vector<std::optional<Polynomial>> slots(source->ambient->nvars());
      do {
        const auto var_col = lp.peek().column;
        std::string var = lp.expect_name("source variable");
        auto idx = source->ambient->var_index(var);
        if (!idx)
          throw SemanticError(
              "'" + var + "' is not a variable of ring '" + src + "'", lineno,
              var_col);
        if (slots[*idx])
          throw SemanticError("duplicate image for variable '" + var + "'",
                              lineno, var_col);
        lp.expect_symbol("->");
        slots[*idx] = dsl_detail::PolyParser(lp, target->ambient).parse();
      } while (lp.accept_symbol(","));
      lp.expect_end();
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (!slots[i])
          throw SemanticError("no image given for variable '" +
                                  source->ambient->vars[i] + "'",
                              lineno, 1);
      std::vector<Polynomial> images;
      for (auto& s : slots) images.push_back(std::move(*s));
      fx.maps.push_back(MapDecl{std::move(name), std::move(src),
                                std::move(tgt), std::move(images), lineno});
      continue;
    }

    if (lp.accept_name("assume")) {
      std::string kind;
      if (lp.accept_name("flat"))
        kind = "flat";
      else if (lp.accept_name("cm"))
        kind = "cm";
      else
        lp.fail("expected 'flat' or 'cm'");
      const auto col = lp.peek().column;
      std::string name = lp.expect_name("declaration name");
      lp.expect_end();
      if (kind == "flat" && !fx.find_map(name))
        throw SemanticError("undeclared map '" + name + "'", lineno, col);
      if (kind == "cm" && !fx.find_ring(name))
        throw SemanticError("undeclared ring '" + name + "'", lineno, col);
      fx.assumptions.emplace_back(std::move(kind), std::move(name));
      continue;
    }

    lp.fail("unknown statement '" + LineParser::shown(lp.peek()) + "'");
  }
  return fx;
}

// Parses `(g1, g2, ...)` — or a bare comma-separated list — as polynomials
// over the given ring. Used by the CLI's --ideal/--q/--qprime flags.
inline std::vector<Polynomial> parse_ideal_list(std::string_view text,
                                                const RingPtr& ring) {
  dsl_detail::LineParser lp(dsl_detail::tokenize(text, 1), 1);
  std::vector<Polynomial> out;
  if (lp.at_end()) return out;
  const bool parens =
      lp.peek().kind == dsl_detail::Token::Kind::symbol && lp.peek().text == "(";
  if (parens)
    out = dsl_detail::parse_poly_list(lp, ring);
  else {
    out.push_back(dsl_detail::PolyParser(lp, ring).parse());
    while (lp.accept_symbol(","))
      out.push_back(dsl_detail::PolyParser(lp, ring).parse());
  }
  lp.expect_end();
  return out;
}

inline std::string pretty_print(const Fixture& fx) {
  std::string out;
  auto poly_list = [](const std::vector<Polynomial>& ps) {
    std::string s = "(";
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (i) s += ", ";
      s += ps[i].to_string();
    }
    return s + ")";
  };
  if (fx.p != 0) out += "field " + std::to_string(fx.p) + "\n";
  for (const RingDecl& r : fx.rings) {
    out += "ring " + r.name + " vars";
    for (const std::string& v : r.ambient->vars) out += " " + v;
    if (!r.defining.empty()) out += " mod " + poly_list(r.defining);
    out += "\n";
  }
  for (const EndoDecl& e : fx.endos) {
    const RingDecl* ring = fx.find_ring(e.ring);
    out += "endo " + e.name + " on " + e.ring + " :";
    for (std::size_t i = 0; i < e.images.size(); ++i) {
      out += (i ? ", " : " ");
      out += ring->ambient->vars[i] + " -> " + e.images[i].to_string();
    }
    out += "\n";
  }
  for (const MapDecl& m : fx.maps) {
    const RingDecl* source = fx.find_ring(m.source);
    out += "map " + m.name + " : " + m.source + " -> " + m.target + " :";
    for (std::size_t i = 0; i < m.images.size(); ++i) {
      out += (i ? ", " : " ");
      out += source->ambient->vars[i] + " -> " + m.images[i].to_string();
    }
    out += "\n";
  }
  for (const auto& [kind, name] : fx.assumptions)
    out += "assume " + kind + " " + name + "\n";
  return out;
}

}  // namespace lad
