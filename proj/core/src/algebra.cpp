// Copyright 2026 The zxalg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zxalg/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "zxalg/error.hpp"

namespace zxalg {

std::string_view to_string(Regime regime) {
  return regime == Regime::ring ? "ring" : "semiring";
}

namespace {

std::uint32_t degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::uint32_t{0});
}

bool is_identifier_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_identifier_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer parse_unsigned(std::string_view s, std::string_view what) {
  if (!all_digits(s)) throw ParseError("malformed " + std::string(what) + " literal '" + std::string(s) + "'");
  return Integer(std::string(s));
}

Integer parse_signed(std::string_view s, std::string_view what) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    Integer v = parse_unsigned(s.substr(1), what);
    return s.front() == '-' ? Integer(-v) : v;
  }
  return parse_unsigned(s, what);
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

Integer reduce_mod(const Integer& v, const Integer& n) {
  Integer r = v % n;
  if (r < 0) r += n;
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Polynomial

bool Polynomial::monomial_before(const Monomial& a, const Monomial& b) {
  const auto da = degree(a);
  const auto db = degree(b);
  if (da != db) return da > db;
  return a > b;
}

Polynomial::Polynomial(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return monomial_before(x.first, y.first); });
  for (auto& term : terms) {
    if (!terms_.empty() && terms_.back().first == term.first) {
      terms_.back().second += term.second;
    } else {
      terms_.push_back(std::move(term));
    }
  }
  std::erase_if(terms_, [](const Term& t) { return t.second == 0; });
}

Polynomial Polynomial::constant(const Integer& c, std::size_t nvars) {
  if (c == 0) return {};
  return Polynomial({{Monomial(nvars, 0), c}});
}

Polynomial Polynomial::variable(std::size_t index, std::size_t nvars) {
  Monomial m(nvars, 0);
  m.at(index) = 1;
  return Polynomial({{std::move(m), Integer(1)}});
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Polynomial::Term> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return Polynomial(std::move(terms));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb.at(i);
      terms.emplace_back(std::move(m), ca * cb);
    }
  }
  return Polynomial(std::move(terms));
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out = a;
  for (auto& term : out.terms_) term.second = -term.second;
  return out;
}

// ---------------------------------------------------------------------------
// Ring construction

Ring Ring::modular(const Integer& n) {
  if (n < 2) throw DomainError("modulus must be at least 2");
  Ring r(Kind::modular);
  r.modulus_ = n;
  return r;
}

Ring Ring::polynomial(Regime regime, std::vector<std::string> variables) {
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty() || !is_identifier_start(v.front()) ||
        !std::all_of(v.begin(), v.end(), is_identifier_char)) {
      throw ParseError("invalid variable name '" + v + "'");
    }
    if (v == "inf") throw ParseError("'inf' is reserved and cannot name a variable");
    if (!seen.insert(v).second) throw ParseError("duplicate variable '" + v + "'");
  }
  Ring r(regime == Regime::ring ? Kind::poly_integer : Kind::poly_natural);
  r.variables_ = std::move(variables);
  return r;
}

Ring Ring::parse(std::string_view descriptor) {
  if (descriptor == "int") return integers();
  if (descriptor == "nat") return naturals();
  if (descriptor == "bool") return booleans();
  if (descriptor == "tropical") return tropical();
  if (descriptor.starts_with("mod:")) {
    return modular(parse_unsigned(descriptor.substr(4), "modulus"));
  }
  auto parse_vars = [](std::string_view list) {
    std::vector<std::string> vars;
    if (list.empty()) return vars;
    std::size_t start = 0;
    while (true) {
      auto comma = list.find(',', start);
      vars.emplace_back(list.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return vars;
  };
  if (descriptor.starts_with("poly-int:")) {
    return polynomial(Regime::ring, parse_vars(descriptor.substr(9)));
  }
  if (descriptor.starts_with("poly-nat:")) {
    return polynomial(Regime::semiring, parse_vars(descriptor.substr(9)));
  }
  throw ParseError("unknown ring descriptor '" + std::string(descriptor) + "'");
}

Regime Ring::regime() const {
  switch (kind_) {
    case Kind::integer:
    case Kind::modular:
    case Kind::poly_integer:
      return Regime::ring;
    default:
      return Regime::semiring;
  }
}

std::string Ring::name() const {
  auto join = [this] {
    std::string out;
    for (std::size_t i = 0; i < variables_.size(); ++i) {
      if (i) out += ',';
      out += variables_[i];
    }
    return out;
  };
  switch (kind_) {
    case Kind::integer: return "int";
    case Kind::natural: return "nat";
    case Kind::boolean: return "bool";
    case Kind::modular: return "mod:" + modulus_.str();
    case Kind::tropical: return "tropical";
    case Kind::poly_integer: return "poly-int:" + join();
    case Kind::poly_natural: return "poly-nat:" + join();
  }
  return {};
}

// ---------------------------------------------------------------------------
// Constants

Element Ring::zero() const { return from_int(0); }
Element Ring::one() const { return from_int(1); }

Element Ring::from_integer(const Integer& value) const {
  if (value < 0 && regime() == Regime::semiring) {
    throw RegimeError("negative constant " + value.str() + " has no image in semiring " + name());
  }
  const Integer& v = value;
  switch (kind_) {
    case Kind::integer:
    case Kind::natural:
      return Element(v);
    case Kind::boolean:
      return Element(Integer(value > 0 ? 1 : 0));
    case Kind::modular:
      return Element(reduce_mod(v, modulus_));
    case Kind::tropical:
      // n * one = min(0, ..., 0) for n >= 1; the empty sum is +inf.
      return Element(value == 0 ? Tropical{} : Tropical{false, 0});
    case Kind::poly_integer:
    case Kind::poly_natural:
      return Element(Polynomial::constant(v, variables_.size()));
  }
  return {};
}

Element Ring::variable(std::string_view name) const {
  if (!is_polynomial()) throw DomainError("ring " + this->name() + " has no variables");
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) {
    throw DomainError("variable '" + std::string(name) + "' is not declared in " + this->name());
  }
  return Element(Polynomial::variable(static_cast<std::size_t>(it - variables_.begin()), variables_.size()));
}

// ---------------------------------------------------------------------------
// Arithmetic

Element Ring::add(const Element& x, const Element& y) const {
  switch (kind_) {
    case Kind::integer:
    case Kind::natural:
      return Element(Integer(x.integer() + y.integer()));
    case Kind::boolean:
      return Element(Integer((x.integer() != 0 || y.integer() != 0) ? 1 : 0));
    case Kind::modular:
      return Element(reduce_mod(x.integer() + y.integer(), modulus_));
    case Kind::tropical: {
      const auto& a = x.tropical();
      const auto& b = y.tropical();
      if (a.infinite) return y;
      if (b.infinite) return x;
      return Element(Tropical{false, a.value < b.value ? a.value : b.value});
    }
    case Kind::poly_integer:
    case Kind::poly_natural:
      return Element(x.polynomial() + y.polynomial());
  }
  return {};
}

Element Ring::mul(const Element& x, const Element& y) const {
  switch (kind_) {
    case Kind::integer:
    case Kind::natural:
      return Element(Integer(x.integer() * y.integer()));
    case Kind::boolean:
      return Element(Integer((x.integer() != 0 && y.integer() != 0) ? 1 : 0));
    case Kind::modular:
      return Element(reduce_mod(x.integer() * y.integer(), modulus_));
    case Kind::tropical: {
      const auto& a = x.tropical();
      const auto& b = y.tropical();
      if (a.infinite || b.infinite) return Element(Tropical{});
      return Element(Tropical{false, a.value + b.value});
    }
    case Kind::poly_integer:
    case Kind::poly_natural:
      return Element(x.polynomial() * y.polynomial());
  }
  return {};
}

Element Ring::neg(const Element& x) const {
  switch (kind_) {
    case Kind::integer:
      return Element(Integer(-x.integer()));
    case Kind::modular:
      return Element(reduce_mod(-x.integer(), modulus_));
    case Kind::poly_integer:
      return Element(-x.polynomial());
    default:
      throw RegimeError("negation is not available in semiring " + name());
  }
}

bool Ring::is_zero(const Element& x) const {
  switch (kind_) {
    case Kind::tropical:
      return x.tropical().infinite;
    case Kind::poly_integer:
    case Kind::poly_natural:
      return x.polynomial().is_zero();
    default:
      return x.integer() == 0;
  }
}

bool Ring::contains(const Element& x) const {
  switch (kind_) {
    case Kind::integer:
      return std::holds_alternative<Integer>(x.value());
    case Kind::natural:
      return std::holds_alternative<Integer>(x.value()) && x.integer() >= 0;
    case Kind::boolean:
      return std::holds_alternative<Integer>(x.value()) && (x.integer() == 0 || x.integer() == 1);
    case Kind::modular:
      return std::holds_alternative<Integer>(x.value()) && x.integer() >= 0 && x.integer() < modulus_;
    case Kind::tropical:
      return std::holds_alternative<Tropical>(x.value());
    case Kind::poly_integer:
    case Kind::poly_natural: {
      if (!std::holds_alternative<Polynomial>(x.value())) return false;
      for (const auto& [m, c] : x.polynomial().terms()) {
        if (m.size() != variables_.size()) return false;
        if (kind_ == Kind::poly_natural && c < 0) return false;
      }
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Literals

namespace {

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars,
                            bool naturals) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty polynomial literal");
  std::vector<Polynomial::Term> terms;
  std::size_t i = 0;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (i != 0) {
      throw ParseError("expected '+' or '-' in polynomial literal '" + s + "'");
    }
    std::size_t end = s.find_first_of("+-", i);
    if (end == std::string::npos) end = s.size();
    std::string_view term(s.data() + i, end - i);
    if (term.empty()) throw ParseError("empty term in polynomial literal '" + s + "'");

    Integer coeff = 1;
    Monomial mono(vars.size(), 0);
    std::size_t f = 0;
    while (f <= term.size()) {
      std::size_t star = term.find('*', f);
      if (star == std::string_view::npos) star = term.size();
      std::string_view factor = term.substr(f, star - f);
      if (factor.empty()) throw ParseError("empty factor in polynomial literal '" + s + "'");
      if (all_digits(factor)) {
        coeff *= Integer(std::string(factor));
      } else if (is_identifier_start(factor.front())) {
        std::size_t caret = factor.find('^');
        std::string_view name = factor.substr(0, caret);
        if (!std::all_of(name.begin(), name.end(), is_identifier_char)) {
          throw ParseError("malformed variable '" + std::string(name) + "'");
        }
        std::uint32_t power = 1;
        if (caret != std::string_view::npos) {
          std::string_view exp = factor.substr(caret + 1);
          if (!all_digits(exp) || exp.size() > 6) {
            throw ParseError("malformed exponent in '" + std::string(factor) + "'");
          }
          power = static_cast<std::uint32_t>(std::stoul(std::string(exp)));
        }
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) {
          throw ParseError("unknown variable '" + std::string(name) + "'");
        }
        mono[static_cast<std::size_t>(it - vars.begin())] += power;
      } else {
        throw ParseError("malformed factor '" + std::string(factor) + "'");
      }
      f = star + 1;
      if (star == term.size()) break;
    }
    if (negative) {
      if (naturals) throw ParseError("negative coefficient in natural polynomial '" + s + "'");
      coeff = -coeff;
    }
    terms.emplace_back(std::move(mono), std::move(coeff));
    i = end;
  }
  return Polynomial(std::move(terms));
}

std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coeff] : p.terms()) {
    Integer c = coeff;
    if (c < 0) {
      out += '-';
      c = -c;
    } else if (!first) {
      out += '+';
    }
    first = false;
    const bool has_vars = std::any_of(mono.begin(), mono.end(), [](auto e) { return e != 0; });
    bool need_star = false;
    if (c != 1 || !has_vars) {
      out += c.str();
      need_star = true;
    }
    for (std::size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      if (need_star) out += '*';
      out += vars[v];
      if (mono[v] > 1) out += "^" + std::to_string(mono[v]);
      need_star = true;
    }
  }
  return out;
}

}  // namespace

Element Ring::parse_element(std::string_view raw) const {
  const std::string text = strip_spaces(raw);
  switch (kind_) {
    case Kind::integer:
      return Element(parse_signed(text, "integer"));
    case Kind::natural:
      if (!text.empty() && text.front() == '-') {
        throw ParseError("negative literal '" + text + "' in semiring nat");
      }
      return Element(parse_unsigned(text, "natural"));
    case Kind::boolean:
      if (text != "0" && text != "1") throw ParseError("boolean literal must be 0 or 1, got '" + text + "'");
      return Element(Integer(text == "1" ? 1 : 0));
    case Kind::modular:
      if (!text.empty() && text.front() == '-') {
        throw ParseError("modular literals are unsigned, got '" + text + "'");
      }
      return Element(reduce_mod(parse_unsigned(text, "modular"), modulus_));
    case Kind::tropical:
      if (text == "inf") return Element(Tropical{});
      return Element(Tropical{false, parse_signed(text, "tropical")});
    case Kind::poly_integer:
    case Kind::poly_natural:
      return Element(parse_polynomial(text, variables_, kind_ == Kind::poly_natural));
  }
  return {};
}

std::string Ring::format(const Element& x) const {
  switch (kind_) {
    case Kind::tropical:
      return x.tropical().infinite ? "inf" : x.tropical().value.str();
    case Kind::poly_integer:
    case Kind::poly_natural:
      return format_polynomial(x.polynomial(), variables_);
    default:
      return x.integer().str();
  }
}

Element Ring::random(std::mt19937_64& rng) const {
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  switch (kind_) {
    case Kind::integer:
      return Element(Integer(uniform(-9, 9)));
    case Kind::natural:
      return Element(Integer(uniform(0, 9)));
    case Kind::boolean:
      return Element(Integer(uniform(0, 1)));
    case Kind::modular: {
      const Integer bound = modulus_ > 1000 ? Integer(1000) : modulus_;
      return Element(Integer(uniform(0, static_cast<int>(bound) - 1)));
    }
    case Kind::tropical:
      if (uniform(0, 4) == 0) return Element(Tropical{});
      return Element(Tropical{false, uniform(-9, 9)});
    case Kind::poly_integer:
    case Kind::poly_natural: {
      const int lo = kind_ == Kind::poly_integer ? -3 : 0;
      std::vector<Polynomial::Term> terms;
      const int count = uniform(0, 3);
      for (int t = 0; t < count; ++t) {
        Monomial m(variables_.size());
        for (auto& e : m) e = static_cast<std::uint32_t>(uniform(0, 2));
        terms.emplace_back(std::move(m), Integer(uniform(lo, 3)));
      }
      return Element(Polynomial(std::move(terms)));
    }
  }
  return {};
}

Element substitute(const Ring& source, const Element& value,
                   const std::map<std::string, Element>& assignment, const Ring& target) {
  if (!source.is_polynomial()) throw DomainError("substitute needs a polynomial source ring, got " + source.name());
  if (source.kind() == Ring::Kind::poly_integer && target.regime() == Regime::semiring) {
    throw RegimeError("integer-coefficient polynomials cannot be evaluated in semiring " + target.name());
  }
  const auto& vars = source.variables();
  Element result = target.zero();
  for (const auto& [mono, coeff] : value.polynomial().terms()) {
    Element term = target.from_integer(coeff);
    for (std::size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      auto it = assignment.find(vars[v]);
      if (it == assignment.end()) throw DomainError("unbound variable '" + vars[v] + "' in substitution");
      for (std::uint32_t k = 0; k < mono[v]; ++k) term = target.mul(term, it->second);
    }
    result = target.add(result, term);
  }
  return result;
}

}  // namespace zxalg
