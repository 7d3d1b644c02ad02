#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "complat/complemented.hpp"

namespace complat {

// Terms over the signature (|, &, ', 0, 1).
//
// Nodes live in a flat arena with children stored before their parents, so
// the last node is the root and evaluation is a single forward pass. The
// symmetric differences +1 and +2 are expanded when parsed and share their
// operand subterms, which makes the arena a DAG rather than a tree.
class Term {
 public:
  enum class Op : std::uint8_t { Var, Bottom, Top, Join, Meet, Comp };

  struct Node {
    Op            op;
    std::uint32_t lhs = 0;  // variable index for Var
    std::uint32_t rhs = 0;
  };

  static Term variable(std::string name);
  static Term bottom();
  static Term top();
  static Term join(Term const& lhs, Term const& rhs);
  static Term meet(Term const& lhs, Term const& rhs);
  static Term comp(Term const& arg);
  // (x' & y) | (x & y')
  static Term sd1(Term const& x, Term const& y);
  // (x | y) & (x' | y')
  static Term sd2(Term const& x, Term const& y);

  std::vector<Node> const&        nodes() const noexcept { return _nodes; }
  std::uint32_t                   root() const noexcept {
    return static_cast<std::uint32_t>(_nodes.size() - 1);
  }
  std::vector<std::string> const& variables() const noexcept { return _vars; }
  std::size_t variable_count() const noexcept { return _vars.size(); }

  // Fully parenthesised rendering, e.g. "((x'&y)|(x&y'))".
  std::string to_string() const;

  // Tree equality (ignores sharing in the arena).
  friend bool operator==(Term const& a, Term const& b);

 private:
  friend class TermParser;
  std::uint32_t append(Term const& other);
  void          merge_variables(Term const& other);

  std::vector<Node>        _nodes;
  std::vector<std::string> _vars;
};

struct Identity {
  std::string name;
  Term        lhs;
  Term        rhs;

  std::size_t                     variable_count() const noexcept {
    return lhs.variable_count();
  }
  std::vector<std::string> const& variables() const noexcept {
    return lhs.variables();
  }
  std::string to_string() const;
};

// Grammar:
//   expr    := meet (('|' | '+1' | '+2') meet)*
//   meet    := postfix ('&' postfix)*
//   postfix := atom "'"*
//   atom    := '0' | '1' | x | y | z | x0..x9 | '(' expr ')'
// Variables are numbered x, y, z, x0, ..., x9 in that order, keeping only
// those that occur. Throws SyntaxError.
Term parse_term(std::string_view text);
// "lhs = rhs", or "lhs <= rhs" meaning "lhs & rhs = lhs". Both sides share
// one variable numbering.
Identity parse_identity(std::string_view text, std::string name = {});
// One "name: lhs = rhs" per line; '#' starts a comment.
std::vector<Identity> parse_identity_file(std::string_view text);

// Throws Error(UnboundVariable) if the assignment is too short.
Element eval(Term const&                term,
             CLattice const&            algebra,
             std::span<Element const>   assignment);

// Reusable scratch space for repeated evaluation.
class Evaluator {
 public:
  Element operator()(Term const&              term,
                     CLattice const&          algebra,
                     std::span<Element const> assignment);

 private:
  std::vector<Element> _values;
};

// First failing assignment in row-major order (first variable slowest), or
// nullopt when the identity holds.
std::optional<std::vector<Element>> check_identity(CLattice const& algebra,
                                                   Identity const& identity);

inline bool satisfies(CLattice const& algebra, Identity const& identity) {
  return !check_identity(algebra, identity).has_value();
}

// "x=a y=b lhs=b rhs=1"
std::string format_witness(CLattice const&          algebra,
                           Identity const&          identity,
                           std::span<Element const> assignment);

// Throws Error(UnknownIdentity).
Identity builtin(std::string_view name);
// Registry entries as (name, source text), in registry order.
std::vector<std::pair<std::string, std::string>> const& builtin_registry();

struct BinaryTable {
  std::size_t          size = 0;
  std::vector<Element> data;

  Element at(Element a, Element b) const noexcept { return data[a * size + b]; }
  friend bool operator==(BinaryTable const&, BinaryTable const&) = default;
};

// Tables of x +1 y and x +2 y.
std::pair<BinaryTable, BinaryTable> sd_tables(CLattice const& algebra);

// First (x, y, z) with (x*y)*z != x*(y*z).
std::optional<Triple> associativity_witness(BinaryTable const& table);
inline bool is_associative(BinaryTable const& table) {
  return !associativity_witness(table).has_value();
}

}  // namespace complat
