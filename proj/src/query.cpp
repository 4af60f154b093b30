#include "topocheck/query.hpp"

#include <algorithm>
#include <cctype>

#include "topocheck/space_props.hpp"

namespace topocheck {

PropertyExpr PropertyExpr::ident(std::string name) {
  return PropertyExpr(Kind::kIdent, std::move(name), {});
}

PropertyExpr PropertyExpr::negate(PropertyExpr operand) {
  return PropertyExpr(Kind::kNot, {},
                      {std::make_shared<const PropertyExpr>(std::move(operand))});
}

PropertyExpr PropertyExpr::conjunction(PropertyExpr lhs, PropertyExpr rhs) {
  return PropertyExpr(Kind::kAnd, {},
                      {std::make_shared<const PropertyExpr>(std::move(lhs)),
                       std::make_shared<const PropertyExpr>(std::move(rhs))});
}

PropertyExpr PropertyExpr::disjunction(PropertyExpr lhs, PropertyExpr rhs) {
  return PropertyExpr(Kind::kOr, {},
                      {std::make_shared<const PropertyExpr>(std::move(lhs)),
                       std::make_shared<const PropertyExpr>(std::move(rhs))});
}

std::string PropertyExpr::to_string() const {
  switch (kind_) {
    case Kind::kIdent: return name_;
    case Kind::kNot: return "~" + operand().to_string();
    case Kind::kAnd: return "(" + lhs().to_string() + " & " + rhs().to_string() + ")";
    case Kind::kOr: return "(" + lhs().to_string() + " | " + rhs().to_string() + ")";
  }
  return {};
}

std::vector<std::string> PropertyExpr::identifiers() const {
  std::vector<std::string> out;
  auto walk = [&out](const PropertyExpr& e, auto& self) -> void {
    if (e.kind_ == Kind::kIdent) {
      if (std::find(out.begin(), out.end(), e.name_) == out.end()) out.push_back(e.name_);
      return;
    }
    for (const auto& child : e.children_) self(*child, self);
  };
  walk(*this, walk);
  return out;
}

void PropertyExpr::check_identifiers() const {
  for (const std::string& name : identifiers()) {
    if (find_space_predicate(name) == nullptr) {
      throw Error(Errc::kUnknownIdentifier, "unknown predicate '" + name + "'");
    }
  }
}

bool PropertyExpr::evaluate(const FiniteSpace& sp) const {
  switch (kind_) {
    case Kind::kIdent: {
      const SpacePredicate* pred = find_space_predicate(name_);
      if (pred == nullptr) {
        throw Error(Errc::kUnknownIdentifier, "unknown predicate '" + name_ + "'");
      }
      return pred->eval(sp);
    }
    case Kind::kNot: return !operand().evaluate(sp);
    case Kind::kAnd: return lhs().evaluate(sp) && rhs().evaluate(sp);
    case Kind::kOr: return lhs().evaluate(sp) || rhs().evaluate(sp);
  }
  return false;
}

bool operator==(const PropertyExpr& a, const PropertyExpr& b) {
  if (a.kind_ != b.kind_ || a.name_ != b.name_ || a.children_.size() != b.children_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children_.size(); ++i) {
    if (!(*a.children_[i] == *b.children_[i])) return false;
  }
  return true;
}

namespace {

class QueryParser {
 public:
  explicit QueryParser(std::string_view text) : text_(text) {}

  PropertyExpr parse() {
    PropertyExpr e = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  PropertyExpr expr() {
    PropertyExpr e = term();
    while (accept('|')) e = PropertyExpr::disjunction(std::move(e), term());
    return e;
  }

  PropertyExpr term() {
    PropertyExpr e = factor();
    while (accept('&')) e = PropertyExpr::conjunction(std::move(e), factor());
    return e;
  }

  PropertyExpr factor() {
    if (accept('~')) return PropertyExpr::negate(factor());
    if (accept('(')) {
      PropertyExpr e = expr();
      if (!accept(')')) fail(pos_ < text_.size() ? "expected ')'" : "expected ')' at end of input");
      return e;
    }
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) {
      fail(pos_ < text_.size() ? "expected identifier, found '" + std::string(1, text_[pos_]) + "'"
                               : "expected identifier at end of input");
    }
    if (std::isdigit(static_cast<unsigned char>(text_[start]))) {
      pos_ = start;
      fail("identifier cannot start with a digit");
    }
    return PropertyExpr::ident(std::string(text_.substr(start, pos_ - start)));
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, 1, static_cast<int>(pos_) + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PropertyExpr parse_query(std::string_view text) { return QueryParser(text).parse(); }

}  // namespace topocheck
