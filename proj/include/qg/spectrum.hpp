#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qg/cayley_table.hpp"
#include "qg/error.hpp"
#include "qg/fixtures.hpp"
#include "qg/identity.hpp"
#include "qg/modular.hpp"
#include "qg/search.hpp"

namespace qg {

// ---------------------------------------------------------------------------
// Pairwise balanced designs.

/// Point set {0..v-1} with blocks covering every unordered pair of distinct
/// points exactly lambda times. Construction validates the coverage.
struct Pbd {
  int v;
  int lambda;
  std::vector<std::vector<int>> blocks;

  Pbd(int v_in, int lambda_in, std::vector<std::vector<int>> blocks_in)
      : v(v_in), lambda(lambda_in), blocks(std::move(blocks_in)) {
    if (v < 1) throw DesignViolation("point count must be positive");
    if (v > kDefaultMaxOrder) throw OrderLimitExceeded(v, kDefaultMaxOrder);
    if (lambda < 1) throw DesignViolation("lambda must be positive");
    std::vector<int> coverage(static_cast<std::size_t>(v) * v, 0);
    for (auto& block : blocks) {
      if (block.size() < 2) throw DesignViolation("blocks must have at least two points");
      std::sort(block.begin(), block.end());
      for (std::size_t i = 0; i < block.size(); ++i) {
        int p = block[i];
        if (p < 0 || p >= v) throw DesignViolation("block point out of range");
        if (i > 0 && block[i - 1] == p) throw DesignViolation("block repeats a point");
        for (std::size_t j = i + 1; j < block.size(); ++j)
          ++coverage[static_cast<std::size_t>(p) * v + block[j]];
      }
    }
    for (int p = 0; p < v; ++p)
      for (int q = p + 1; q < v; ++q)
        if (coverage[static_cast<std::size_t>(p) * v + q] != lambda)
          throw DesignViolation("pair (" + std::to_string(p) + ", " + std::to_string(q) +
                                ") covered " +
                                std::to_string(coverage[static_cast<std::size_t>(p) * v + q]) +
                                " times, expected " + std::to_string(lambda));
  }
};

/// Affine plane of prime order q as a PBD: points are Z_q x Z_q encoded
/// q*i + j, blocks are the q^2 + q lines, lambda = 1.
inline Pbd affine_plane(int q) {
  if (q < 2 || !is_prime(static_cast<unsigned long long>(q)))
    throw DesignViolation("affine plane generator needs a prime order");
  std::vector<std::vector<int>> lines;
  for (int slope = 0; slope < q; ++slope)
    for (int intercept = 0; intercept < q; ++intercept) {
      std::vector<int> line;
      for (int x = 0; x < q; ++x) line.push_back(q * x + (slope * x + intercept) % q);
      lines.push_back(std::move(line));
    }
  for (int column = 0; column < q; ++column) {
    std::vector<int> line;
    for (int y = 0; y < q; ++y) line.push_back(q * column + y);
    lines.push_back(std::move(line));
  }
  return Pbd(q * q, 1, std::move(lines));
}

// Text format: line 1 "v lambda", then one block per line.

inline Pbd parse_pbd(std::istream& in) {
  int v = 0, lambda = 0;
  std::string header;
  if (!std::getline(in, header)) throw FormatError("expected 'v lambda' header line");
  {
    std::istringstream hs(header);
    if (!(hs >> v >> lambda)) throw FormatError("expected 'v lambda' header line");
  }
  std::vector<std::vector<int>> blocks;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> block;
    int p;
    while (ls >> p) block.push_back(p);
    if (!block.empty()) blocks.push_back(std::move(block));
  }
  return Pbd(v, lambda, std::move(blocks));
}

inline std::string to_text(const Pbd& design) {
  std::string out = std::to_string(design.v) + " " + std::to_string(design.lambda) + "\n";
  for (const auto& block : design.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out.push_back(' ');
      out += std::to_string(block[i]);
    }
    out.push_back('\n');
  }
  return out;
}

// ---------------------------------------------------------------------------
// Wilson parameter arithmetic.

struct WilsonParams {
  std::vector<long long> block_sizes;  // the size set K, sorted
  long long alpha;                     // gcd of k(k-1) over K
  long long beta;                      // gcd of k-1 over K
};

inline WilsonParams wilson_params(std::vector<long long> block_sizes) {
  if (block_sizes.empty()) throw FormatError("block size set must be non-empty");
  std::sort(block_sizes.begin(), block_sizes.end());
  block_sizes.erase(std::unique(block_sizes.begin(), block_sizes.end()), block_sizes.end());
  long long alpha = 0, beta = 0;
  for (long long k : block_sizes) {
    if (k < 2) throw FormatError("block sizes must be at least 2");
    alpha = std::gcd(alpha, k * (k - 1));
    beta = std::gcd(beta, k - 1);
  }
  return WilsonParams{std::move(block_sizes), alpha, beta};
}

/// The two congruences v(v-1) = 0 (mod alpha), v-1 = 0 (mod beta) that an
/// order must satisfy to be eligible for a block design over the size set.
inline bool wilson_admissible(const WilsonParams& params, long long v) {
  return (v * (v - 1)) % params.alpha == 0 && (v - 1) % params.beta == 0;
}

// ---------------------------------------------------------------------------
// Composition constructions.

/// Order-2^k table built as a direct product of copies of the order-4 and
/// order-8 fixtures, using k = 2a + 3b with the order-8 factor preferred.
inline CayleyTable two_power_construct(int k, int max_k = 12) {
  if (k < 2) throw Unrepresentable("no order-2^k table exists below k = 2");
  if (k > max_k)
    throw OrderLimitExceeded(1ll << k, 1ll << max_k);
  int b = 0, a = 0;
  switch (k % 3) {
    case 0: b = k / 3; a = 0; break;
    case 1: b = (k - 4) / 3; a = 2; break;  // k >= 4 here since k = 1 is rejected
    case 2: b = (k - 2) / 3; a = 1; break;
  }
  const CayleyTable& four = fixture("boxtimes4");
  const CayleyTable& eight = fixture("diamond8");
  std::optional<CayleyTable> result;
  for (int i = 0; i < a; ++i)
    result = result ? direct_product(*result, four) : four;
  for (int i = 0; i < b; ++i)
    result = result ? direct_product(*result, eight) : eight;
  return *result;
}

/// Composes an order-v table from a lambda = 1 design and idempotent block
/// models keyed by block size: x*x = x, and distinct x, y multiply inside the
/// unique block containing both, under the block's ascending point order.
inline CayleyTable pbd_compose(const Pbd& design,
                               const std::map<int, CayleyTable>& block_models) {
  if (design.lambda != 1) throw LambdaUnsupported(design.lambda);
  for (const auto& block : design.blocks) {
    auto model = block_models.find(static_cast<int>(block.size()));
    if (model == block_models.end()) throw MissingBlockModel(static_cast<int>(block.size()));
    if (model->second.order() != static_cast<int>(block.size()))
      throw OrderMismatch(model->second.order(), static_cast<int>(block.size()));
    if (!is_idempotent(model->second)) throw NotIdempotent(static_cast<int>(block.size()));
  }
  const int v = design.v;
  std::vector<int> cells(static_cast<std::size_t>(v) * v, -1);
  for (int x = 0; x < v; ++x) cells[static_cast<std::size_t>(x) * v + x] = x;
  for (const auto& block : design.blocks) {
    const CayleyTable& model = block_models.at(static_cast<int>(block.size()));
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = 0; j < block.size(); ++j)
        if (i != j)
          cells[static_cast<std::size_t>(block[i]) * v + block[j]] =
              block[model(static_cast<int>(i), static_cast<int>(j))];
  }
  return CayleyTable(v, std::move(cells));
}

// ---------------------------------------------------------------------------
// Spectrum bookkeeping for the identity x*(y*(y*x)) = y.

enum class ExistenceStatus { kExists, kNotExists, kUnknown };
enum class Evidence { kFixture, kModular, kProduct, kPbd, kSearch, kExhaustion };

inline const char* to_string(ExistenceStatus status) {
  switch (status) {
    case ExistenceStatus::kExists: return "EXISTS";
    case ExistenceStatus::kNotExists: return "NOT_EXISTS";
    case ExistenceStatus::kUnknown: return "UNKNOWN";
  }
  return "?";
}

inline const char* to_string(Evidence evidence) {
  switch (evidence) {
    case Evidence::kFixture: return "FIXTURE";
    case Evidence::kModular: return "MODULAR";
    case Evidence::kProduct: return "PRODUCT";
    case Evidence::kPbd: return "PBD";
    case Evidence::kSearch: return "SEARCH";
    case Evidence::kExhaustion: return "EXHAUSTION";
  }
  return "?";
}

struct SpectrumEntry {
  int order;
  ExistenceStatus status;
  Evidence evidence;
  std::optional<CayleyTable> witness;
  /// Search outcome backing a search-derived entry; for NOT_EXISTS this is
  /// the exhaustion certificate (status EXHAUSTED_NONE, nodes explored).
  std::optional<SearchOutcome> certificate;
};

struct SpectrumReport {
  std::vector<SpectrumEntry> entries;  // one per order, ascending from 1
};

/// Per-order existence report, resolved in a fixed pipeline: fixtures, then
/// residue-ring constructions, then direct products of already-found
/// witnesses, then bounded search. Deterministic for a fixed budget; raising
/// the budget can only turn UNKNOWN into a decided status.
inline SpectrumReport spectrum_report(int max_order, long long budget,
                                      bool require_idempotent = false) {
  if (max_order < 1) throw FormatError("max order must be positive");
  SpectrumReport report;
  const Identity& t2 = t2_identity();

  auto accepts = [&](const CayleyTable& t) {
    return !require_idempotent || is_idempotent(t);
  };

  for (int order = 1; order <= max_order; ++order) {
    std::optional<SpectrumEntry> entry;

    if (order == 1) {
      entry = SpectrumEntry{order, ExistenceStatus::kExists, Evidence::kFixture,
                            CayleyTable(1, {0}), std::nullopt};
    }

    if (!entry)
      for (const NamedTable& named : fixtures())
        if (named.table.order() == order && accepts(named.table)) {
          entry = SpectrumEntry{order, ExistenceStatus::kExists, Evidence::kFixture,
                                named.table, std::nullopt};
          break;
        }

    if (!entry)
      for (long long k : scan_roots(order)) {
        if (std::gcd(k, static_cast<long long>(order)) != 1) continue;
        bool found = false;
        for (long long b : b_solutions(order, k)) {
          CayleyTable t = materialize(build_t_form(order, k, b));
          if (accepts(t)) {
            entry = SpectrumEntry{order, ExistenceStatus::kExists, Evidence::kModular,
                                  std::move(t), std::nullopt};
            found = true;
            break;
          }
        }
        if (found) break;
      }

    if (!entry)
      for (int d = 2; d * d <= order; ++d) {
        if (order % d) continue;
        const SpectrumEntry& left = report.entries[d - 1];
        const SpectrumEntry& right = report.entries[order / d - 1];
        if (left.status == ExistenceStatus::kExists && left.witness &&
            right.status == ExistenceStatus::kExists && right.witness) {
          entry = SpectrumEntry{order, ExistenceStatus::kExists, Evidence::kProduct,
                                direct_product(*left.witness, *right.witness, order),
                                std::nullopt};
          break;
        }
      }

    if (!entry) {
      SearchSpec spec;
      spec.order = order;
      spec.identities = {t2};
      spec.require_idempotent = require_idempotent;
      spec.node_budget = budget;
      SearchOutcome outcome = search(spec);
      switch (outcome.status) {
        case SearchStatus::kFound:
          entry = SpectrumEntry{order, ExistenceStatus::kExists, Evidence::kSearch,
                                outcome.witnesses.front(), outcome};
          break;
        case SearchStatus::kExhaustedNone:
          entry = SpectrumEntry{order, ExistenceStatus::kNotExists, Evidence::kExhaustion,
                                std::nullopt, std::move(outcome)};
          break;
        case SearchStatus::kBudgetExceeded:
          entry = SpectrumEntry{order, ExistenceStatus::kUnknown, Evidence::kSearch,
                                std::nullopt, std::move(outcome)};
          break;
      }
    }

    report.entries.push_back(std::move(*entry));
  }
  return report;
}

}  // namespace qg
