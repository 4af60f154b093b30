#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "topocheck/space.hpp"

namespace topocheck {

/// Boolean query over registered space predicates.
///
///   expr   := term ('|' term)*
///   term   := factor ('&' factor)*
///   factor := '~' factor | '(' expr ')' | ident
class PropertyExpr {
 public:
  enum class Kind { kIdent, kNot, kAnd, kOr };

  static PropertyExpr ident(std::string name);
  static PropertyExpr negate(PropertyExpr operand);
  static PropertyExpr conjunction(PropertyExpr lhs, PropertyExpr rhs);
  static PropertyExpr disjunction(PropertyExpr lhs, PropertyExpr rhs);

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  const PropertyExpr& lhs() const { return *children_.at(0); }
  const PropertyExpr& rhs() const { return *children_.at(1); }
  const PropertyExpr& operand() const { return *children_.at(0); }

  /// Fully parenthesized form, e.g. `(locally_indiscrete & ~indiscrete)`.
  std::string to_string() const;
  /// Identifiers in first-occurrence order.
  std::vector<std::string> identifiers() const;

  /// Throws UnknownIdentifier when a name is not a registered predicate.
  bool evaluate(const FiniteSpace& sp) const;
  /// Throws UnknownIdentifier for the first unregistered name.
  void check_identifiers() const;

  friend bool operator==(const PropertyExpr& a, const PropertyExpr& b);

 private:
  PropertyExpr(Kind kind, std::string name,
               std::vector<std::shared_ptr<const PropertyExpr>> children)
      : kind_(kind), name_(std::move(name)), children_(std::move(children)) {}

  Kind kind_;
  std::string name_;
  std::vector<std::shared_ptr<const PropertyExpr>> children_;
};

/// Throws ParseError (column is 1-based, line is always 1).
PropertyExpr parse_query(std::string_view text);

}  // namespace topocheck
