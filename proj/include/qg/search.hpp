#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qg/cayley_table.hpp"
#include "qg/error.hpp"
#include "qg/identity.hpp"

namespace qg {

enum class SearchMode { kFindOne, kCount, kEnumerate };

enum class SearchStatus { kFound, kExhaustedNone, kBudgetExceeded };

inline const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kFound: return "FOUND";
    case SearchStatus::kExhaustedNone: return "EXHAUSTED_NONE";
    case SearchStatus::kBudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "?";
}

struct SearchSpec {
  int order = 1;
  std::vector<Identity> identities;
  bool require_idempotent = false;
  /// Optional n*n row-major grid; -1 marks an open cell.
  std::optional<std::vector<int>> prefilled;
  long long node_budget = 100'000'000;
  SearchMode mode = SearchMode::kFindOne;
  int enumerate_limit = 1;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::kExhaustedNone;
  std::vector<CayleyTable> witnesses;
  long long nodes_explored = 0;
  std::optional<long long> count;  // exact model count, COUNT mode only
};

namespace detail {

// Terms compiled to postfix opcodes so the hot loop walks a flat array
// instead of a pointer tree. A lookup at a still-open cell aborts the
// evaluation; the instance is rechecked once more cells are filled.
enum : signed char { kOpPushX = -1, kOpPushY = -2, kOpMul = -3 };

struct CompiledIdentity {
  std::vector<signed char> lhs, rhs;
  int max_stack;
};

inline void compile_term(const Term& term, std::vector<signed char>& out) {
  if (term.is_variable()) {
    out.push_back(term.variable_name() == 'x' ? kOpPushX : kOpPushY);
    return;
  }
  compile_term(term.left(), out);
  compile_term(term.right(), out);
  out.push_back(kOpMul);
}

inline CompiledIdentity compile_identity(const Identity& id) {
  CompiledIdentity compiled;
  compile_term(id.lhs, compiled.lhs);
  compile_term(id.rhs, compiled.rhs);
  compiled.max_stack =
      static_cast<int>(std::max(compiled.lhs.size(), compiled.rhs.size())) + 1;
  return compiled;
}

class QuasigroupSearch {
 public:
  explicit QuasigroupSearch(const SearchSpec& spec) : spec_(spec), n_(spec.order) {
    if (n_ < 1) throw InvalidSpec("order must be positive");
    if (spec.node_budget < 1) throw InvalidSpec("node budget must be positive");
    if (spec.mode == SearchMode::kEnumerate && spec.enumerate_limit < 1)
      throw InvalidSpec("enumeration limit must be positive");
    words_ = (n_ + 63) / 64;
    grid_.assign(static_cast<std::size_t>(n_) * n_, -1);
    row_used_.assign(static_cast<std::size_t>(n_) * words_, 0);
    col_used_.assign(static_cast<std::size_t>(n_) * words_, 0);
    int max_stack = 1;
    for (const Identity& id : spec_.identities) {
      compiled_.push_back(compile_identity(id));
      max_stack = std::max(max_stack, compiled_.back().max_stack);
    }
    stack_.resize(max_stack);
    confirmed_.assign(compiled_.size() * grid_.size(), 0);
    seed_prefill();
  }

  SearchOutcome run() {
    outcome_ = SearchOutcome{};
    if (!seed_consistent_ && spec_.mode == SearchMode::kCount) outcome_.count = 0;
    if (seed_consistent_) {
      bool completed = dfs();
      if (!completed) {
        outcome_.status = SearchStatus::kBudgetExceeded;
      } else if (spec_.mode == SearchMode::kCount) {
        outcome_.count = model_count_;
        outcome_.status =
            model_count_ > 0 ? SearchStatus::kFound : SearchStatus::kExhaustedNone;
      } else {
        outcome_.status = outcome_.witnesses.empty() ? SearchStatus::kExhaustedNone
                                                     : SearchStatus::kFound;
      }
    }
    outcome_.nodes_explored = nodes_;
    return outcome_;
  }

 private:
  void seed_prefill() {
    std::vector<std::pair<int, int>> fixed;
    if (spec_.prefilled) {
      if (spec_.prefilled->size() != grid_.size())
        throw InvalidSpec("prefilled grid has wrong dimensions");
      for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) {
          int v = (*spec_.prefilled)[static_cast<std::size_t>(r) * n_ + c];
          if (v < -1 || v >= n_) throw InvalidSpec("prefilled cell value out of range");
          if (v >= 0) fixed.emplace_back(r * n_ + c, v);
        }
    }
    if (spec_.require_idempotent)
      for (int i = 0; i < n_; ++i) {
        int cell = i * n_ + i;
        if (spec_.prefilled && (*spec_.prefilled)[cell] >= 0 &&
            (*spec_.prefilled)[cell] != i)
          throw InvalidSpec("prefill conflicts with the idempotent diagonal");
        fixed.emplace_back(cell, i);
      }
    for (auto [cell, v] : fixed) {
      int r = cell / n_, c = cell % n_;
      if (grid_[cell] == v) continue;
      if (grid_[cell] != -1 || used(row_used_, r, v) || used(col_used_, c, v))
        throw InvalidSpec("prefilled cells repeat a value in a row or column");
      place(r, c, v);
    }
    // A prefill can already falsify an identity; that is an empty search
    // space, not a malformed spec.
    seed_consistent_ = identities_consistent();
  }

  bool used(const std::vector<std::uint64_t>& mask, int line, int v) const {
    return mask[static_cast<std::size_t>(line) * words_ + v / 64] >> (v % 64) & 1;
  }

  void place(int r, int c, int v) {
    grid_[static_cast<std::size_t>(r) * n_ + c] = v;
    row_used_[static_cast<std::size_t>(r) * words_ + v / 64] |= 1ull << (v % 64);
    col_used_[static_cast<std::size_t>(c) * words_ + v / 64] |= 1ull << (v % 64);
  }

  void unplace(int r, int c, int v) {
    grid_[static_cast<std::size_t>(r) * n_ + c] = -1;
    row_used_[static_cast<std::size_t>(r) * words_ + v / 64] &= ~(1ull << (v % 64));
    col_used_[static_cast<std::size_t>(c) * words_ + v / 64] &= ~(1ull << (v % 64));
  }

  int candidate_count(int r, int c) const {
    int count = 0;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t free = ~(row_used_[static_cast<std::size_t>(r) * words_ + w] |
                             col_used_[static_cast<std::size_t>(c) * words_ + w]);
      if (w == words_ - 1 && n_ % 64) free &= (1ull << (n_ % 64)) - 1;
      count += std::popcount(free);
    }
    return count;
  }

  int eval_compiled(const std::vector<signed char>& ops, int x, int y) {
    int top = -1;
    for (signed char op : ops) {
      switch (op) {
        case kOpPushX: stack_[++top] = x; break;
        case kOpPushY: stack_[++top] = y; break;
        default: {
          int right = stack_[top--];
          int value = grid_[static_cast<std::size_t>(stack_[top]) * n_ + right];
          if (value < 0) return -1;
          stack_[top] = value;
        }
      }
    }
    return stack_[0];
  }

  /// Every ground instance of every identity whose cells are all filled must
  /// already hold; instances blocked on an open cell are skipped. An instance
  /// that holds stays held while the path only adds cells, so it is marked
  /// confirmed and skipped until the search backtracks past this point.
  bool identities_consistent() {
    std::size_t idx = 0;
    for (const CompiledIdentity& id : compiled_)
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y, ++idx) {
          if (confirmed_[idx]) continue;
          int lhs = eval_compiled(id.lhs, x, y);
          if (lhs < 0) continue;
          int rhs = eval_compiled(id.rhs, x, y);
          if (rhs < 0) continue;
          if (lhs != rhs) return false;
          confirmed_[idx] = 1;
          confirm_trail_.push_back(idx);
        }
    return true;
  }

  /// Minimum-remaining-values cell, ties broken lexicographically by (row,
  /// column). Returns false when the grid is complete.
  bool select_cell(int& br, int& bc) const {
    int best = n_ + 1;
    br = -1;
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c)
        if (grid_[static_cast<std::size_t>(r) * n_ + c] == -1) {
          int count = candidate_count(r, c);
          if (count < best) {
            best = count;
            br = r;
            bc = c;
            if (count == 0) return true;
          }
        }
    return br >= 0;
  }

  bool record_solution() {
    // Every instance became fully defined at some assignment and was checked
    // there, so a complete grid is already a model.
    if (spec_.mode == SearchMode::kCount) {
      ++model_count_;
      return false;
    }
    outcome_.witnesses.emplace_back(n_, grid_);
    if (spec_.mode == SearchMode::kFindOne) return true;
    return outcome_.witnesses.size() >= static_cast<std::size_t>(spec_.enumerate_limit);
  }

  /// Returns false iff the node budget ran out; `done_` signals an early
  /// finish with enough witnesses.
  bool dfs() {
    int r, c;
    if (!select_cell(r, c)) {
      done_ = record_solution();
      return true;
    }
    for (int v = 0; v < n_; ++v) {
      if (used(row_used_, r, v) || used(col_used_, c, v)) continue;
      if (nodes_ >= spec_.node_budget) return false;
      ++nodes_;
      place(r, c, v);
      std::size_t trail_mark = confirm_trail_.size();
      bool within_budget = true;
      if (identities_consistent()) within_budget = dfs();
      while (confirm_trail_.size() > trail_mark) {
        confirmed_[confirm_trail_.back()] = 0;
        confirm_trail_.pop_back();
      }
      unplace(r, c, v);
      if (!within_budget) return false;
      if (done_) return true;
    }
    return true;
  }

  const SearchSpec& spec_;
  int n_;
  int words_;
  std::vector<int> grid_;
  std::vector<std::uint64_t> row_used_, col_used_;
  std::vector<CompiledIdentity> compiled_;
  std::vector<int> stack_;
  std::vector<char> confirmed_;              // per ground instance, current path
  std::vector<std::size_t> confirm_trail_;   // undo log for confirmed_
  long long nodes_ = 0;
  long long model_count_ = 0;
  bool done_ = false;
  bool seed_consistent_ = true;
  SearchOutcome outcome_;
};

}  // namespace detail

/// Depth-first completion of the Cayley grid with row/column forward checking
/// and eager identity evaluation. Deterministic for a fixed spec.
inline SearchOutcome search(const SearchSpec& spec) {
  return detail::QuasigroupSearch(spec).run();
}

/// Post-hoc certificate check, independent of the engine: Latin property,
/// every identity on all bindings, and the diagonal when idempotency is
/// required.
inline bool verify_witness(const CayleyTable& t, const SearchSpec& spec) {
  if (t.order() != spec.order) return false;
  try {
    (void)CayleyTable(t.order(), t.cells());
  } catch (const Error&) {
    return false;
  }
  for (const Identity& id : spec.identities)
    if (!check_identity(t, id).holds) return false;
  if (spec.require_idempotent && !is_idempotent(t)) return false;
  return true;
}

}  // namespace qg
