// Copyright 2026 The dlorder Authors
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

// Datalog programs over a single strict linear order `<`, optionally with
// declared constants, or over Allen interval relations.
//
// Text grammar (`%` starts a line comment):
//
//   program  := (decl | bind | rule)*
//   decl     := "@const" IDENT ("," IDENT)* "."
//   bind     := "@bind" IDENT "=" ELEMENT "."
//   rule     := head (":-" body)? "."
//   head     := IDENT "(" terms? ")" | IDENT
//   body     := literal ("," literal)*
//   literal  := IDENT "(" terms? ")" | IDENT | term "<" term
//             | relset "(" term "," term ")"
//   relset   := "[" REL ("," REL)* "]" | REL
//
// Terms starting with an uppercase letter or '_' are variables; terms
// starting with a lowercase letter are constants.

#ifndef DLORDER_CORE_HPP_
#define DLORDER_CORE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dlorder/error.hpp"

namespace dlorder {

struct Term {
  enum class Kind : std::uint8_t { kVariable, kConstant };
  Kind kind = Kind::kVariable;
  std::string name;

  static Term Var(std::string name) { return {Kind::kVariable, std::move(name)}; }
  static Term Const(std::string name) { return {Kind::kConstant, std::move(name)}; }
  bool is_var() const { return kind == Kind::kVariable; }
  bool is_const() const { return kind == Kind::kConstant; }
  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

/// Bit set over the 13 Allen basic relations, see allen.hpp for the bit
/// assignment. Stored here so the AST does not depend on the algebra.
using RelationBits = std::uint16_t;

struct IdbAtom {
  std::string symbol;
  std::vector<Term> args;
  friend bool operator==(const IdbAtom&, const IdbAtom&) = default;
};

/// `left < right`.
struct OrderAtom {
  Term left;
  Term right;
  friend bool operator==(const OrderAtom&, const OrderAtom&) = default;
};

/// `[r1,...,rk](left, right)`: a union of basic interval relations.
struct IntervalAtom {
  RelationBits relations = 0;
  Term left;
  Term right;
  friend bool operator==(const IntervalAtom&, const IntervalAtom&) = default;
};

struct Atom {
  std::variant<IdbAtom, OrderAtom, IntervalAtom> value;
  SourcePos pos;

  const IdbAtom* idb() const { return std::get_if<IdbAtom>(&value); }
  const OrderAtom* order() const { return std::get_if<OrderAtom>(&value); }
  const IntervalAtom* interval() const { return std::get_if<IntervalAtom>(&value); }
  // Positions are diagnostics only and do not take part in equality.
  friend bool operator==(const Atom& a, const Atom& b) { return a.value == b.value; }
};

struct Rule {
  IdbAtom head;
  std::vector<Atom> body;
  SourcePos pos;

  /// Distinct variables in order of first occurrence (head first).
  std::vector<std::string> variables() const;
  friend bool operator==(const Rule& a, const Rule& b) {
    return a.head == b.head && a.body == b.body;
  }
};

struct ConstantBinding {
  std::string constant;
  std::string element;  // unparsed; interpreted against an OrderModel
  SourcePos pos;
  friend bool operator==(const ConstantBinding& a, const ConstantBinding& b) {
    return a.constant == b.constant && a.element == b.element;
  }
};

enum class ProgramMode : std::uint8_t { kOrder, kInterval };

struct Program {
  std::vector<Rule> rules;
  std::vector<std::string> constants;  // declaration order
  std::vector<ConstantBinding> bindings;
  /// Arity of each IDB symbol: every symbol other than `<` used in a head
  /// or a body. Symbols never used in a head denote empty relations.
  std::map<std::string, int> idb_arity;

  ProgramMode mode() const;
  bool has_interval_atoms() const;
  bool has_order_atoms() const;
  bool has_constant_occurrences() const;
  std::optional<int> arity(std::string_view symbol) const;
  /// IDB symbols in order of first appearance in the text.
  std::vector<std::string> idb_symbols() const;
  /// Rebuilds idb_arity from the rules. Used after programmatic edits.
  void recompute_arities();

  friend bool operator==(const Program& a, const Program& b) {
    return a.rules == b.rules && a.constants == b.constants &&
           a.bindings == b.bindings && a.idb_arity == b.idb_arity;
  }
};

/// Program size parameters: number of IDB symbols, rules, maximal IDB arity,
/// maximal number of distinct variables in a rule, maximal number of IDB
/// atoms in a body, and the encoded length (count of atoms plus term
/// occurrences).
struct ProgramParams {
  int n_idb = 0;
  int n_rules = 0;
  int max_arity = 0;
  int max_rule_vars = 0;
  int max_body_idbs = 0;
  int length = 0;
  friend bool operator==(const ProgramParams&, const ProgramParams&) = default;
};

struct Diagnostic {
  SourcePos pos;
  std::string message;
};

/// Parses program text. Throws ParseError on syntax errors, undeclared
/// constants and inconsistent IDB arities.
Program parse(std::string_view text);

/// All well-formedness problems of `p`; empty iff `p` is well formed.
std::vector<Diagnostic> validate(const Program& p);

/// Throws ParseError carrying the first diagnostic, if any.
void require_valid(const Program& p);

ProgramParams params(const Program& p);

/// Canonical program text; `parse(print(p)) == p` for every valid program.
std::string print(const Program& p);
std::string print(const Rule& r);
std::string print(const Atom& a);
std::string print(const IdbAtom& a);

/// The relation names recognised in interval literals.
bool is_relation_name(std::string_view name);

/// Reads a whole file; throws UsageError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace dlorder

#endif  // DLORDER_CORE_HPP_
