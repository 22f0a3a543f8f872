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

#pragma once

// Exact commutative (semi)ring arithmetic selected at runtime.
//
// A Ring is a small value describing which algebra is active; Elements are
// plain canonical values and every operation goes through the Ring. All
// arithmetic is exact, and element equality is structural on canonical forms.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zxalg {

using Integer = boost::multiprecision::cpp_int;

enum class Regime { semiring, ring };

std::string_view to_string(Regime regime);

/// Min-plus value; `infinite` is the additive identity.
struct Tropical {
  bool infinite = true;
  Integer value = 0;

  friend bool operator==(const Tropical& a, const Tropical& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

/// Exponent vector, one entry per variable of the owning ring.
using Monomial = std::vector<std::uint32_t>;

/// Multivariate polynomial in canonical form: terms strictly ordered by
/// monomial (descending total degree, then descending lexicographic), no zero
/// coefficients. The zero polynomial has no terms.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Integer>;

  Polynomial() = default;
  /// Canonicalizes: merges duplicate monomials, drops zeros, sorts.
  explicit Polynomial(std::vector<Term> terms);

  static Polynomial constant(const Integer& c, std::size_t nvars);
  static Polynomial variable(std::size_t index, std::size_t nvars);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Strict order used for canonical sorting.
  static bool monomial_before(const Monomial& a, const Monomial& b);

 private:
  std::vector<Term> terms_;
};

/// An element of some Ring. Which alternative is active is fixed by the ring:
/// Integer for int/nat/bool/mod, Tropical for tropical, Polynomial for the
/// polynomial instances.
class Element {
 public:
  using Storage = std::variant<Integer, Tropical, Polynomial>;

  Element() = default;
  Element(Storage value) : value_(std::move(value)) {}  // NOLINT

  const Storage& value() const { return value_; }
  const Integer& integer() const { return std::get<Integer>(value_); }
  const Tropical& tropical() const { return std::get<Tropical>(value_); }
  const Polynomial& polynomial() const { return std::get<Polynomial>(value_); }

  friend bool operator==(const Element&, const Element&) = default;

 private:
  Storage value_;
};

class Ring {
 public:
  enum class Kind { integer, natural, boolean, modular, tropical, poly_integer, poly_natural };

  /// Parses a descriptor: int, nat, bool, mod:<n>, tropical, poly-int:<vars>,
  /// poly-nat:<vars>.
  static Ring parse(std::string_view descriptor);

  static Ring integers() { return Ring(Kind::integer); }
  static Ring naturals() { return Ring(Kind::natural); }
  static Ring booleans() { return Ring(Kind::boolean); }
  static Ring tropical() { return Ring(Kind::tropical); }
  static Ring modular(const Integer& n);
  /// Integer coefficients when `regime` is ring, natural coefficients otherwise.
  static Ring polynomial(Regime regime, std::vector<std::string> variables);

  Kind kind() const { return kind_; }
  Regime regime() const;
  bool is_polynomial() const {
    return kind_ == Kind::poly_integer || kind_ == Kind::poly_natural;
  }
  const Integer& modulus() const { return modulus_; }
  const std::vector<std::string>& variables() const { return variables_; }
  /// Canonical descriptor string; Ring::parse(name()) == *this.
  std::string name() const;

  Element zero() const;
  Element one() const;
  /// Image of an integer under the canonical map Z -> R (N -> S for semirings).
  /// Negative values throw RegimeError in the semiring regime.
  Element from_int(long long value) const { return from_integer(Integer(value)); }
  Element from_integer(const Integer& value) const;
  /// The indeterminate `name`; DomainError when absent.
  Element variable(std::string_view name) const;

  Element add(const Element& x, const Element& y) const;
  Element mul(const Element& x, const Element& y) const;
  /// RegimeError in the semiring regime.
  Element neg(const Element& x) const;
  Element sub(const Element& x, const Element& y) const { return add(x, neg(y)); }
  bool eq(const Element& x, const Element& y) const { return x == y; }
  bool is_zero(const Element& x) const;
  bool is_one(const Element& x) const { return x == one(); }

  /// True when `x` is a canonical value of this ring.
  bool contains(const Element& x) const;

  Element parse_element(std::string_view text) const;
  std::string format(const Element& x) const;

  /// Small random element, used by property tests and sampled soundness runs.
  Element random(std::mt19937_64& rng) const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  explicit Ring(Kind kind) : kind_(kind) {}

  Kind kind_;
  Integer modulus_ = 0;
  std::vector<std::string> variables_;
};

/// Evaluates a polynomial `value` of `source` under `assignment`, using the
/// arithmetic of `target`. Integer-coefficient polynomials may only be sent to
/// rings; natural-coefficient ones go anywhere.
Element substitute(const Ring& source, const Element& value,
                   const std::map<std::string, Element>& assignment,
                   const Ring& target);

}  // namespace zxalg
