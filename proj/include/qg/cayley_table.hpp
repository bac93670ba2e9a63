#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qg/error.hpp"

namespace qg {

// Orders above this are rejected by the constructors that can grow tables
// (direct products, file parsing). Guard rail, not an algorithmic limit.
inline constexpr int kDefaultMaxOrder = 10000;

/// Finite binary operation on {0..n-1}, stored as a row-major n-by-n grid
/// whose rows and columns are permutations (a Latin square). Construction
/// validates both invariants, so a live CayleyTable is always a quasigroup.
class CayleyTable {
 public:
  /// Validates and adopts a flat row-major grid. Throws RowViolation or
  /// ColumnViolation naming the first offending line (rows checked first).
  CayleyTable(int order, std::vector<int> cells) : n_(order), cells_(std::move(cells)) {
    if (n_ < 1 || cells_.size() != static_cast<std::size_t>(n_) * n_)
      throw FormatError("grid is not square");
    std::vector<char> seen(n_);
    for (int r = 0; r < n_; ++r) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int c = 0; c < n_; ++c) {
        int v = (*this)(r, c);
        if (v < 0 || v >= n_ || seen[v]) throw RowViolation(r);
        seen[v] = 1;
      }
    }
    for (int c = 0; c < n_; ++c) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int r = 0; r < n_; ++r) {
        int v = (*this)(r, c);
        if (seen[v]) throw ColumnViolation(c);
        seen[v] = 1;
      }
    }
  }

  explicit CayleyTable(const std::vector<std::vector<int>>& grid)
      : CayleyTable(static_cast<int>(grid.size()), flatten(grid)) {}

  int order() const { return n_; }

  /// Value of x * y.
  int operator()(int x, int y) const { return cells_[static_cast<std::size_t>(x) * n_ + y]; }

  const std::vector<int>& cells() const { return cells_; }

  bool operator==(const CayleyTable&) const = default;

 private:
  static std::vector<int> flatten(const std::vector<std::vector<int>>& grid) {
    std::vector<int> flat;
    flat.reserve(grid.size() * grid.size());
    for (const auto& row : grid) {
      if (row.size() != grid.size()) throw FormatError("grid is not square");
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
  }

  int n_;
  std::vector<int> cells_;
};

inline CayleyTable validate_table(const std::vector<std::vector<int>>& grid) {
  return CayleyTable(grid);
}

inline CayleyTable validate_table(int order, std::vector<int> cells) {
  return CayleyTable(order, std::move(cells));
}

// ---------------------------------------------------------------------------
// Parastrophes

/// One of the six conjugate selectors: a permutation of the three roles
/// (left argument, right argument, result) of a quasigroup triple.
class ParastropheSelector {
 public:
  constexpr ParastropheSelector() : roles_{0, 1, 2} {}

  static ParastropheSelector from_roles(std::array<int, 3> roles) {
    std::array<char, 3> seen{};
    for (int v : roles) {
      if (v < 0 || v > 2 || seen[v]) throw FormatError("not a permutation of the three roles");
      seen[v] = 1;
    }
    return ParastropheSelector(roles);
  }

  static constexpr ParastropheSelector identity() { return ParastropheSelector({0, 1, 2}); }
  /// (1 2): swaps the two arguments.
  static constexpr ParastropheSelector swap_arguments() { return ParastropheSelector({1, 0, 2}); }
  /// (2 3): left division, result(x, y) = the unique z with x * z = y.
  static constexpr ParastropheSelector left_division() { return ParastropheSelector({0, 2, 1}); }
  /// (1 3): right division, result(x, y) = the unique z with z * y = x.
  static constexpr ParastropheSelector right_division() { return ParastropheSelector({2, 1, 0}); }
  static constexpr ParastropheSelector cycle_forward() { return ParastropheSelector({1, 2, 0}); }
  static constexpr ParastropheSelector cycle_backward() { return ParastropheSelector({2, 0, 1}); }

  static const std::array<ParastropheSelector, 6>& all() {
    static const std::array<ParastropheSelector, 6> every = {
        identity(),      swap_arguments(), left_division(),
        right_division(), cycle_forward(), cycle_backward()};
    return every;
  }

  constexpr int role(int position) const { return roles_[position]; }

  bool operator==(const ParastropheSelector&) const = default;

 private:
  constexpr explicit ParastropheSelector(std::array<int, 3> roles) : roles_(roles) {}
  std::array<int, 3> roles_;
};

/// Composition law: parastrophe(parastrophe(t, a), b) == parastrophe(t, compose(a, b)).
inline ParastropheSelector compose(const ParastropheSelector& a, const ParastropheSelector& b) {
  return ParastropheSelector::from_roles({a.role(b.role(0)), a.role(b.role(1)), a.role(b.role(2))});
}

/// Conjugate operation: for every triple (x, y, x*y) of t, the result table
/// maps (triple[s(0)], triple[s(1)]) to triple[s(2)].
inline CayleyTable parastrophe(const CayleyTable& t, const ParastropheSelector& s) {
  const int n = t.order();
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  std::array<int, 3> triple;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      triple = {x, y, t(x, y)};
      cells[static_cast<std::size_t>(triple[s.role(0)]) * n + triple[s.role(1)]] =
          triple[s.role(2)];
    }
  return CayleyTable(n, std::move(cells));
}

// ---------------------------------------------------------------------------
// Translations

enum class TranslationKind { L, R, P };

/// L_a(x) = a*x, R_a(x) = x*a, P_a(x) = the unique z with x*z = a.
inline std::vector<int> translation(const CayleyTable& t, TranslationKind kind, int a) {
  const int n = t.order();
  std::vector<int> image(n);
  switch (kind) {
    case TranslationKind::L:
      for (int x = 0; x < n; ++x) image[x] = t(a, x);
      break;
    case TranslationKind::R:
      for (int x = 0; x < n; ++x) image[x] = t(x, a);
      break;
    case TranslationKind::P:
      for (int x = 0; x < n; ++x)
        for (int z = 0; z < n; ++z)
          if (t(x, z) == a) {
            image[x] = z;
            break;
          }
      break;
  }
  return image;
}

/// Translation form of the identity x(y . yx) = y: for every y the squared
/// left translation equals the P translation, L_y(L_y(x)) = P_y(x).
inline bool satisfies_t2_via_translations(const CayleyTable& t) {
  const int n = t.order();
  for (int y = 0; y < n; ++y) {
    std::vector<int> left = translation(t, TranslationKind::L, y);
    std::vector<int> p = translation(t, TranslationKind::P, y);
    for (int x = 0; x < n; ++x)
      if (left[left[x]] != p[x]) return false;
  }
  return true;
}

inline bool is_idempotent(const CayleyTable& t) {
  for (int i = 0; i < t.order(); ++i)
    if (t(i, i) != i) return false;
  return true;
}

/// True iff (x, y) -> (t1(x,y), t2(x,y)) hits every ordered pair exactly once.
inline bool are_orthogonal(const CayleyTable& t1, const CayleyTable& t2) {
  if (t1.order() != t2.order()) throw OrderMismatch(t1.order(), t2.order());
  const int n = t1.order();
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::size_t pair = static_cast<std::size_t>(t1(x, y)) * n + t2(x, y);
      if (seen[pair]) return false;
      seen[pair] = 1;
    }
  return true;
}

/// Componentwise product on pairs encoded row-major: (u, v) -> u * order2 + v.
inline CayleyTable direct_product(const CayleyTable& t1, const CayleyTable& t2,
                                  int max_order = kDefaultMaxOrder) {
  const long long m = t1.order(), n = t2.order();
  if (m * n > max_order) throw OrderLimitExceeded(m * n, max_order);
  const int order = static_cast<int>(m * n);
  std::vector<int> cells(static_cast<std::size_t>(order) * order);
  for (int u1 = 0; u1 < m; ++u1)
    for (int v1 = 0; v1 < n; ++v1) {
      const std::size_t row = static_cast<std::size_t>(u1 * n + v1) * order;
      for (int u2 = 0; u2 < m; ++u2)
        for (int v2 = 0; v2 < n; ++v2)
          cells[row + u2 * n + v2] = t1(u1, u2) * static_cast<int>(n) + t2(v1, v2);
    }
  return CayleyTable(order, std::move(cells));
}

// ---------------------------------------------------------------------------
// Text format: first line "n", then n lines of n space-separated integers.

inline std::string to_text(const CayleyTable& t) {
  std::string out = std::to_string(t.order());
  out.push_back('\n');
  for (int r = 0; r < t.order(); ++r) {
    for (int c = 0; c < t.order(); ++c) {
      if (c) out.push_back(' ');
      out += std::to_string(t(r, c));
    }
    out.push_back('\n');
  }
  return out;
}

inline CayleyTable parse_table(std::istream& in, int max_order = kDefaultMaxOrder) {
  long long n = 0;
  if (!(in >> n)) throw FormatError("expected table order on the first line");
  if (n < 1 || n > max_order) throw FormatError("table order out of range: " + std::to_string(n));
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (auto& cell : cells)
    if (!(in >> cell)) throw FormatError("table body ended early");
  return CayleyTable(static_cast<int>(n), std::move(cells));
}

inline CayleyTable parse_table_text(std::string_view text, int max_order = kDefaultMaxOrder) {
  std::istringstream in{std::string(text)};
  return parse_table(in, max_order);
}

inline std::ostream& operator<<(std::ostream& out, const CayleyTable& t) {
  return out << to_text(t);
}

}  // namespace qg
