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

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lad/monomial.hpp"
#include "lad/prime_field.hpp"

namespace lad {

// A polynomial ring F_p[x_1, ..., x_s] with a fixed global monomial order.
// Rings are shared immutably; polynomials carry a pointer to theirs.
struct PolyRing {
  PrimeField field;
  std::vector<std::string> vars;
  OrderKind order;

  std::size_t nvars() const { return vars.size(); }

  std::optional<std::size_t> var_index(std::string_view name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return i;
    return std::nullopt;
  }

  bool operator==(const PolyRing& o) const {
    return field == o.field && vars == o.vars && order == o.order;
  }
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars,
                         OrderKind order = OrderKind::degrevlex) {
  if (vars.empty()) throw SemanticError("a ring needs at least one variable");
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j])
        throw SemanticError("duplicate variable name '" + vars[i] + "'");
  return std::make_shared<const PolyRing>(
      PolyRing{PrimeField(p), std::move(vars), order});
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a.get() == b.get() || (a && b && *a == *b);
}

struct Term {
  std::uint32_t coeff;
  Monomial mono;

  bool operator==(const Term& o) const {
    return coeff == o.coeff && mono == o.mono;
  }
};

// Immutable polynomial: terms strictly descending in the ring's order, no
// zero coefficients. The empty term list is the zero polynomial.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    const PrimeField& F = p.ring_->field;
    for (Term& t : terms) {
      if (t.mono.nvars() != p.ring_->nvars())
        throw SemanticError("monomial arity does not match the ring");
      t.coeff = t.coeff % F.modulus();
    }
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return mono_compare(a.mono, b.mono, p.ring_->order) > 0;
    });
    for (const Term& t : terms) {
      if (t.coeff == 0) continue;
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff = F.add(p.terms_.back().coeff, t.coeff);
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else {
        p.terms_.push_back(t);
      }
    }
    return p;
  }

  static Polynomial variable(RingPtr ring, std::size_t i) {
    Monomial m = Monomial::var(ring->nvars(), i);
    return term(std::move(ring), 1, std::move(m));
  }

  static Polynomial constant(RingPtr ring, std::int64_t c) {
    std::uint32_t r = ring->field.reduce(c);
    Monomial one = Monomial::one(ring->nvars());
    return term(std::move(ring), r, std::move(one));
  }

  static Polynomial term(RingPtr ring, std::int64_t c, Monomial m) {
    Polynomial p(std::move(ring));
    std::uint32_t r = p.ring_->field.reduce(c);
    if (r != 0) p.terms_.push_back(Term{r, std::move(m)});
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  std::uint32_t constant_term() const {
    for (const Term& t : terms_)
      if (t.mono.is_one()) return t.coeff;
    return 0;
  }

  const Monomial& leading_monomial() const { return terms_.front().mono; }
  std::uint32_t leading_coeff() const { return terms_.front().coeff; }

  // Max total degree over all terms (0 for the zero polynomial). Under lex
  // the leading term need not realize it, hence the scan.
  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (const Term& t : terms_)
      if (t.mono.degree() > d) d = t.mono.degree();
    return d;
  }

  std::uint64_t min_degree() const {
    std::uint64_t d = 0;
    bool first = true;
    for (const Term& t : terms_) {
      if (first || t.mono.degree() < d) d = t.mono.degree();
      first = false;
    }
    return d;
  }

  bool is_homogeneous() const {
    for (const Term& t : terms_)
      if (t.mono.degree() != terms_[0].mono.degree()) return false;
    return true;
  }

  Polynomial operator+(const Polynomial& o) const {
    const PrimeField& F = ring_->field;
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      int c = mono_compare(terms_[i].mono, o.terms_[j].mono, ring_->order);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back(o.terms_[j++]);
      } else {
        std::uint32_t s = F.add(terms_[i].coeff, o.terms_[j].coeff);
        if (s != 0) r.terms_.push_back(Term{s, terms_[i].mono});
        ++i;
        ++j;
      }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
  }

  Polynomial negated() const {
    const PrimeField& F = ring_->field;
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = F.neg(t.coeff);
    return r;
  }

  Polynomial operator-(const Polynomial& o) const { return *this + o.negated(); }

  Polynomial scaled(std::uint32_t c) const {
    const PrimeField& F = ring_->field;
    c %= F.modulus();
    if (c == 0) return Polynomial(ring_);
    Polynomial r = *this;
    for (Term& t : r.terms_) t.coeff = F.mul(t.coeff, c);
    return r;
  }

  Polynomial term_multiplied(std::uint32_t c, const Monomial& m) const {
    const PrimeField& F = ring_->field;
    c %= F.modulus();
    if (c == 0) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_)
      r.terms_.push_back(Term{F.mul(t.coeff, c), t.mono.mul(m)});
    return r;  // multiplying by a monomial preserves the term order
  }

  Polynomial operator*(const Polynomial& o) const {
    std::vector<Term> prods;
    prods.reserve(terms_.size() * o.terms_.size());
    const PrimeField& F = ring_->field;
    for (const Term& a : terms_)
      for (const Term& b : o.terms_)
        prods.push_back(Term{F.mul(a.coeff, b.coeff), a.mono.mul(b.mono)});
    return from_terms(ring_, std::move(prods));
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field.inv(leading_coeff()));
  }

  Polynomial pow(std::uint32_t e) const {
    Polynomial acc = constant(ring_, 1);
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return acc;
  }

  // Frobenius power f^p in characteristic p: coefficients are fixed by
  // c -> c^p on F_p, so only the exponents scale. Linear in the term count.
  Polynomial pth_power() const {
    std::uint32_t p = ring_->field.modulus();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back(Term{t.coeff, t.mono.pow(p)});
    return r;  // strictly increasing exponent map preserves the order
  }

  // Ring-map image of this polynomial: variable i goes to images[i], which
  // live in `target`. Powers of each image are cached per call.
  Polynomial substitute(std::span<const Polynomial> images,
                        const RingPtr& target) const {
    if (images.size() != ring_->nvars())
      throw SemanticError("substitute: one image per variable required");
    for (const Polynomial& im : images)
      if (!same_ring(im.ring(), target))
        throw SemanticError("substitute: images must live in the target ring");
    std::map<std::pair<std::size_t, std::uint32_t>, Polynomial> cache;
    auto power_impl = [&](auto&& self, std::size_t v,
                          std::uint32_t e) -> const Polynomial& {
      auto key = std::make_pair(v, e);
      auto it = cache.find(key);
      if (it != cache.end()) return it->second;
      Polynomial val(target);
      if (e == 1) {
        val = images[v];
      } else if (e % 2 == 0) {
        const Polynomial& h = self(self, v, e / 2);
        val = h * h;
      } else {
        val = self(self, v, e - 1) * images[v];
      }
      return cache.emplace(std::move(key), std::move(val)).first->second;
    };
    auto power = [&](std::size_t v, std::uint32_t e) -> const Polynomial& {
      return power_impl(power_impl, v, e);
    };
    Polynomial acc(target);
    for (const Term& t : terms_) {
      Polynomial prod = Polynomial::constant(target, t.coeff);
      for (std::size_t v = 0; v < ring_->nvars(); ++v) {
        std::uint32_t e = t.mono.exp(v);
        if (e == 0) continue;
        prod = prod * power(v, e);
        if (prod.is_zero()) break;
      }
      acc = acc + prod;
    }
    return acc;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      if (k > 0) out += " + ";
      const Term& t = terms_[k];
      bool printed = false;
      if (t.coeff != 1 || t.mono.is_one()) {
        out += std::to_string(t.coeff);
        printed = true;
      }
      for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        std::uint32_t e = t.mono.exp(i);
        if (e == 0) continue;
        if (printed) out += "*";
        out += ring_->vars[i];
        if (e > 1) out += "^" + std::to_string(e);
        printed = true;
      }
    }
    return out;
  }

  bool operator==(const Polynomial& o) const {
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace lad
