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

// Text formats: diagram terms, matrix files, derivation scripts and equation
// fixture files.
//
// Diagram grammar (';' binds looser than '|', both left-associative):
//
//   term   := tensor (';' tensor)*
//   tensor := atom ('|' atom)*
//   atom   := '(' term ')' | name | name '(' args ')'
//
// Names: Z(n,m[,phase]), X(n,m[,0|pi]), H, T, Tinv, P, swap, cap, cup,
// id[(k)], empty, AND, XOR, NOT, copy(k), gbox(phase). Phases are ring
// literals. '#' starts a comment that runs to the end of the line.

#include <string>
#include <string_view>
#include <vector>

#include "zxalg/diagram.hpp"
#include "zxalg/interp.hpp"
#include "zxalg/rewrite.hpp"

namespace zxalg {

/// Parses a diagram term. Errors carry 1-based line and column, counted from
/// (`first_line`, `first_column`) so callers can report positions within a
/// larger file.
Diagram parse_diagram(std::string_view text, const Ring& ring, int first_line = 1, int first_column = 1);

/// Prints a term that parses back to the same tree.
std::string format_diagram(const Diagram& d, const Ring& ring);

/// "rows cols" followed by rows*cols whitespace-separated literals.
DenseMatrix parse_matrix(std::string_view text, const Ring& ring);

/// Script lines:
///   start: <term>
///   rule <name> [at <position>] [with k=v,...] -> <term>
///   semantic -> <term>
Derivation parse_derivation(std::string_view text, const Ring& ring);

struct EquationFixture {
  std::string name;
  Diagram lhs;
  Diagram rhs;
};

/// Sections "[name]" each followed by "lhs: <term>" and "rhs: <term>".
std::vector<EquationFixture> parse_fixtures(std::string_view text, const Ring& ring);

/// Reads a whole file; DomainError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace zxalg
