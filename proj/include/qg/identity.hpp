#pragma once

#include <cctype>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qg/cayley_table.hpp"
#include "qg/error.hpp"

namespace qg {

/// Term over the variables x, y and one binary operation. Immutable tree;
/// copies share structure.
class Term {
 public:
  static Term variable(char name) {
    return Term(std::make_shared<const Node>(Node{name, nullptr, nullptr}));
  }

  static Term product(Term left, Term right) {
    return Term(std::make_shared<const Node>(
        Node{'\0', std::move(left.node_), std::move(right.node_)}));
  }

  bool is_variable() const { return node_->var != '\0'; }
  char variable_name() const { return node_->var; }
  Term left() const { return Term(node_->left); }
  Term right() const { return Term(node_->right); }

  /// Canonical form: variables bare, every product fully parenthesized.
  std::string to_string() const {
    std::string out;
    write(*node_, out);
    return out;
  }

  friend bool operator==(const Term& a, const Term& b) { return equal(*a.node_, *b.node_); }

 private:
  struct Node {
    char var;  // 'x' or 'y'; '\0' marks a product
    std::shared_ptr<const Node> left, right;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static void write(const Node& node, std::string& out) {
    if (node.var != '\0') {
      out.push_back(node.var);
      return;
    }
    out.push_back('(');
    write(*node.left, out);
    out.push_back('*');
    write(*node.right, out);
    out.push_back(')');
  }

  static bool equal(const Node& a, const Node& b) {
    if (a.var != b.var) return false;
    if (a.var != '\0') return true;
    return equal(*a.left, *b.left) && equal(*a.right, *b.right);
  }

  std::shared_ptr<const Node> node_;
};

/// Universally quantified two-variable identity lhs = rhs.
struct Identity {
  Term lhs;
  Term rhs;
  std::string name;  // optional label, e.g. a catalog key

  std::string to_string() const { return lhs.to_string() + "=" + rhs.to_string(); }
};

struct Verdict {
  bool holds;
  std::optional<std::pair<int, int>> counterexample;  // first failing (x, y), lexicographic
};

// ---------------------------------------------------------------------------
// Parser.
//
//   identity := term "=" term
//   term     := primary ("*" primary)*        ("*" is left-associative)
//   primary  := "x" | "y" | "(" term ")"
//
// Whitespace is ignored; offsets in errors are 0-based byte positions.

namespace detail {

class IdentityParser {
 public:
  explicit IdentityParser(std::string_view text) : text_(text) {}

  Identity parse() {
    Term lhs = parse_term();
    skip_space();
    if (!consume('=')) throw SyntaxError(pos_, "expected '='");
    Term rhs = parse_term();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected trailing input");
    return Identity{std::move(lhs), std::move(rhs), ""};
  }

 private:
  Term parse_term() {
    Term left = parse_primary();
    while (true) {
      skip_space();
      if (!consume('*')) return left;
      left = Term::product(std::move(left), parse_primary());
    }
  }

  Term parse_primary() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Term inner = parse_term();
      skip_space();
      if (!consume(')')) throw SyntaxError(pos_, "expected ')'");
      return inner;
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      return Term::variable(c);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) throw UnknownVariable(pos_, c);
    throw SyntaxError(pos_, std::string("unexpected character '") + c + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char expected) {
    if (pos_ < text_.size() && text_[pos_] == expected) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Identity parse_identity(std::string_view text) {
  return detail::IdentityParser(text).parse();
}

inline Identity parse_identity(std::string_view text, std::string name) {
  Identity id = parse_identity(text);
  id.name = std::move(name);
  return id;
}

// ---------------------------------------------------------------------------
// Evaluation

inline int eval_term(const Term& term, const CayleyTable& t, int x, int y) {
  if (term.is_variable()) return term.variable_name() == 'x' ? x : y;
  return t(eval_term(term.left(), t, x, y), eval_term(term.right(), t, x, y));
}

/// Exhaustive check over all order^2 bindings; reports the first failure in
/// lexicographic (x, y) order.
inline Verdict check_identity(const CayleyTable& t, const Identity& id) {
  const int n = t.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (eval_term(id.lhs, t, x, y) != eval_term(id.rhs, t, x, y))
        return Verdict{false, std::make_pair(x, y)};
  return Verdict{true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Built-in catalog: the seven identities that force orthogonality to a
// parastrophe, plus idempotency.

inline const std::vector<Identity>& catalog() {
  static const std::vector<Identity> entries = {
      parse_identity("x*(x*(x*y))=y", "C3"),
      parse_identity("x*(y*(y*x))=y", "T2"),
      parse_identity("x*(x*y)=y*x", "Stein1"),
      parse_identity("(x*y)*x=y*(x*y)", "Stein2"),
      parse_identity("(x*y)*(y*x)=y", "Stein3"),
      parse_identity("(x*y)*y=x*(x*y)", "Schroder1"),
      parse_identity("(y*x)*(x*y)=y", "Schroder2"),
      parse_identity("x*x=x", "Idempotent"),
  };
  return entries;
}

inline const Identity* find_in_catalog(std::string_view name) {
  for (const Identity& id : catalog())
    if (id.name == name) return &id;
  return nullptr;
}

inline const Identity& t2_identity() { return *find_in_catalog("T2"); }

/// CLI helper: a catalog name if it matches one, otherwise DSL text.
inline Identity resolve_identity(std::string_view name_or_text) {
  if (const Identity* hit = find_in_catalog(name_or_text)) return *hit;
  return parse_identity(name_or_text);
}

}  // namespace qg
