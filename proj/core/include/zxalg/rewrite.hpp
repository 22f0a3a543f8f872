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

// Rule application on diagram terms and derivation checking.
//
// Terms are compared after structural normalization: sequential and parallel
// composition are flattened into right-nested chains, identity factors are
// dropped from sequential chains, adjacent identities merge in parallel
// chains, and the alias macros (gbox, copy, XOR, NOT) are replaced by the
// spiders they name. A rule matches at a position when its normalized left
// side equals a contiguous run of factors of the chain there.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zxalg/diagram.hpp"
#include "zxalg/rules.hpp"

namespace zxalg {

Diagram structural_normalize(const Diagram& d);
/// As above, also rewriting copy(k) to the spider Z(1,k) with phase ring.one().
Diagram structural_normalize(const Diagram& d, const Ring& ring);

/// Path of child indices from the root; 0 is the first child of a seq or par
/// node, 1 the second.
using Position = std::vector<int>;

/// "root" or dot-separated indices such as "1.0.1"; ParseError otherwise.
Position parse_position(const std::string& text);
std::string to_string(const Position& position);

/// The subterm at `position` of the normalized term (copy boxes kept); DomainError when the
/// path leaves the tree.
Diagram subterm(const Diagram& d, const Position& position);

/// Rewrites `d` with `rule` left to right at `position` (in the normalized
/// term). DomainError on a missing match or incomplete bindings, RegimeError
/// when the rule is unavailable over `ring`.
Diagram apply_rule(const Diagram& d, const RewriteRule& rule, const Bindings& bindings, const Position& position,
                   const Ring& ring);

/// Bindings from textual assignments, typed against the rule's parameters.
Bindings bind_arguments(const Schema& schema, const std::map<std::string, std::string>& arguments, const Ring& ring);

struct DerivationStep {
  /// Empty for a semantic step, which is justified by evaluation alone.
  std::string rule;
  std::map<std::string, std::string> arguments;
  Position position;
  Diagram result;
  int line = 0;
};

struct Derivation {
  Diagram start;
  std::vector<DerivationStep> steps;
};

enum class DerivationMode {
  /// Rule steps must be rule applications whose result matches the stated
  /// term after structural normalization. Steps tagged semantic are checked
  /// by evaluation.
  syntactic,
  /// Every step is checked by evaluation against its predecessor; rule names
  /// are informational.
  semantic,
};

struct DerivationReport {
  bool ok = false;
  /// 1-based index of the first failing step; 0 when ok.
  std::size_t failed_step = 0;
  std::string reason;
  Diagram final;
};

DerivationReport check_derivation(const Derivation& derivation, const Ring& ring,
                                  DerivationMode mode = DerivationMode::syntactic);

}  // namespace zxalg
