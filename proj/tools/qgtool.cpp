// Command-line front end: verify, construct, scan, search, product, compose,
// and spectrum over the plain-text table and design formats.
//
// Output conventions: machine-readable report lines ("key: value") and tables
// go to stdout; a line reading exactly "table:" introduces each table when a
// report precedes it. Subcommands whose only output is a table (product,
// compose) print it bare so results pipe straight into --table arguments.
// Human-oriented notes go to stderr.
//
// Exit codes: 0 success, 1 domain error (the error name is printed to
// stderr), 2 usage error, 3 search exhausted with no model, 4 node budget
// exceeded.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qg/qg.hpp"

namespace {

qg::CayleyTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qg::FormatError("cannot open table file: " + path);
  return qg::parse_table(in);
}

qg::Pbd load_pbd(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qg::FormatError("cannot open design file: " + path);
  return qg::parse_pbd(in);
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

template <typename Range>
std::string join(const Range& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(v);
  }
  return out.empty() ? "(none)" : out;
}

int run_verify(const std::string& table_path, const std::string& identity_text) {
  qg::CayleyTable table = load_table(table_path);
  qg::Identity id = qg::resolve_identity(identity_text);
  qg::Verdict verdict = qg::check_identity(table, id);
  std::cout << "identity: " << (id.name.empty() ? id.to_string() : id.name) << "\n";
  std::cout << "order: " << table.order() << "\n";
  std::cout << "holds: " << yes_no(verdict.holds) << "\n";
  if (verdict.counterexample) {
    auto [x, y] = *verdict.counterexample;
    std::cout << "counterexample: x=" << x << " y=" << y << "\n";
    std::cout << "lhs: " << qg::eval_term(id.lhs, table, x, y) << "\n";
    std::cout << "rhs: " << qg::eval_term(id.rhs, table, x, y) << "\n";
  }
  return 0;
}

int run_construct_modular(long long modulus, long long k, long long b) {
  qg::TQuasigroupForm form = qg::build_t_form(modulus, k, b);
  qg::ConditionReport report = qg::check_t_conditions(form);
  std::vector<long long> solutions = qg::b_solutions(modulus, form.c);
  std::vector<long long> nonzero(solutions.begin() + (solutions.empty() ? 0 : 1),
                                 solutions.end());
  std::cout << "modulus: " << form.modulus << "\n";
  std::cout << "k: " << form.c << "\n";
  std::cout << "a: " << form.a << "\n";
  std::cout << "c: " << form.c << "\n";
  std::cout << "b: " << form.b << "\n";
  std::cout << "phi_ok: " << yes_no(report.phi_ok) << "\n";
  std::cout << "psi_ok: " << yes_no(report.psi_ok) << "\n";
  std::cout << "b_ok: " << yes_no(report.b_ok) << "\n";
  std::cout << "roots: " << join(qg::scan_roots(modulus)) << "\n";
  std::cout << "b_solutions: " << join(solutions) << "\n";
  std::cout << "b_solutions_nonzero: " << join(nonzero) << "\n";
  std::cout << "table:\n" << qg::materialize(form);
  return 0;
}

int run_construct_twopower(int k) {
  qg::CayleyTable table = qg::two_power_construct(k);
  std::cout << "order: " << table.order() << "\n";
  std::cout << "table:\n" << table;
  return 0;
}

int run_scan(long long from, long long to, bool factor, bool audit) {
  qg::PolynomialScanReport report = qg::scan_polynomial(from, to);
  for (const auto& entry : report.entries) {
    std::cout << entry.k << "\t" << entry.value;
    if (factor) {
      std::cout << "\t";
      for (std::size_t i = 0; i < entry.prime_factors.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << entry.prime_factors[i];
      }
    }
    std::cout << "\n";
  }
  if (factor) std::cout << "prime_divisors: " << join(report.prime_divisors) << "\n";
  if (audit) {
    qg::ScanReferenceAudit a = qg::audit_scan_reference();
    std::vector<long long> mismatched;
    for (const auto& row : a.value_rows)
      if (!row.matches) mismatched.push_back(row.k);
    std::cout << "audit_value_mismatches: " << join(mismatched) << "\n";
    std::cout << "audit_duplicated_k: " << join(a.duplicated_ks) << "\n";
    std::cout << "audit_inconsistent_duplicates: " << join(a.inconsistent_duplicate_ks)
              << "\n";
    std::cout << "audit_missing_k: " << join(a.missing_ks) << "\n";
    std::cout << "audit_composite_listed_divisors: " << join(a.composite_listed_divisors)
              << "\n";
    std::cout << "audit_listed_not_recomputed: " << join(a.listed_not_recomputed) << "\n";
    std::cout << "audit_recomputed_not_listed: " << join(a.recomputed_not_listed) << "\n";
  }
  return 0;
}

int run_search(int order, const std::vector<std::string>& identity_texts, bool idempotent,
               bool count_mode, int limit, long long budget) {
  qg::SearchSpec spec;
  spec.order = order;
  for (const auto& text : identity_texts) spec.identities.push_back(qg::resolve_identity(text));
  spec.require_idempotent = idempotent;
  spec.node_budget = budget;
  if (count_mode) {
    spec.mode = qg::SearchMode::kCount;
  } else if (limit > 1) {
    spec.mode = qg::SearchMode::kEnumerate;
    spec.enumerate_limit = limit;
  }
  qg::SearchOutcome outcome = qg::search(spec);
  std::cout << "status: " << qg::to_string(outcome.status) << "\n";
  std::cout << "nodes: " << outcome.nodes_explored << "\n";
  if (outcome.count) std::cout << "count: " << *outcome.count << "\n";
  for (const auto& witness : outcome.witnesses) std::cout << "table:\n" << witness;
  switch (outcome.status) {
    case qg::SearchStatus::kFound: return 0;
    case qg::SearchStatus::kExhaustedNone: return 3;
    case qg::SearchStatus::kBudgetExceeded: return 4;
  }
  return 0;
}

int run_product(const std::vector<std::string>& table_paths) {
  qg::CayleyTable result = load_table(table_paths.front());
  for (std::size_t i = 1; i < table_paths.size(); ++i)
    result = qg::direct_product(result, load_table(table_paths[i]));
  std::cout << result;
  return 0;
}

int run_compose(const std::string& pbd_path, const std::vector<std::string>& model_args) {
  qg::Pbd design = load_pbd(pbd_path);
  std::map<int, qg::CayleyTable> models;
  for (const auto& arg : model_args) {
    auto eq = arg.find('=');
    if (eq == std::string::npos)
      throw qg::FormatError("--model expects SIZE=TABLEFILE, got: " + arg);
    int size = 0;
    try {
      size = std::stoi(arg.substr(0, eq));
    } catch (const std::exception&) {
      throw qg::FormatError("--model expects a numeric size, got: " + arg);
    }
    models.emplace(size, load_table(arg.substr(eq + 1)));
  }
  std::cout << qg::pbd_compose(design, models);
  return 0;
}

int run_spectrum(int max_order, bool idempotent, long long budget) {
  qg::SpectrumReport report = qg::spectrum_report(max_order, budget, idempotent);
  for (const auto& entry : report.entries)
    std::cout << entry.order << ": " << qg::to_string(entry.status) << " "
              << qg::to_string(entry.evidence) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasigroup toolkit: verify identities on Cayley tables, construct "
               "models over residue rings, search for finite models, and compose "
               "larger models from designs."};
  app.require_subcommand(1);

  // verify
  std::string verify_table, verify_identity;
  CLI::App* verify = app.add_subcommand("verify", "Check an identity on a table file");
  verify->add_option("--table", verify_table, "table file")->required();
  verify->add_option("--identity", verify_identity,
                     "catalog name (T2, C3, Stein1, Stein2, Stein3, Schroder1, "
                     "Schroder2, Idempotent) or a DSL string like \"x*(y*(y*x))=y\"")
      ->required();

  // construct
  CLI::App* construct = app.add_subcommand("construct", "Build tables from closed forms");
  construct->require_subcommand(1);
  long long cm_modulus = 0, cm_k = 0, cm_b = 0;
  CLI::App* modular = construct->add_subcommand(
      "modular", "Linear form (-k^3) x + k y + b over Z_r from a root k of k^5+k^4+1");
  modular->add_option("--modulus", cm_modulus, "ring modulus r")->required();
  modular->add_option("--k", cm_k, "root of k^5+k^4+1 mod r (may be negative)")->required();
  modular->add_option("--b", cm_b, "constant term");
  int tp_k = 0;
  CLI::App* twopower = construct->add_subcommand(
      "twopower", "Order-2^k table as a product of the order-4 and order-8 fixtures");
  twopower->add_option("--k", tp_k, "exponent, k >= 2")->required();

  // scan
  long long scan_from = -20, scan_to = 20;
  bool scan_factor = false, scan_audit = false;
  CLI::App* scan = app.add_subcommand("scan", "Tabulate f(k) = k^5 + k^4 + 1 over a range");
  scan->add_option("--from", scan_from, "first k");
  scan->add_option("--to", scan_to, "last k");
  scan->add_flag("--factor", scan_factor, "factor each |f(k)| and list the prime set");
  scan->add_flag("--audit", scan_audit,
                 "cross-check the built-in reference tabulation and itemize its defects");

  // search
  int search_order = 0, search_limit = 1;
  long long search_budget = 100'000'000;
  bool search_idempotent = false, search_count = false;
  std::vector<std::string> search_identities;
  CLI::App* search_cmd =
      app.add_subcommand("search", "Backtracking model finder for identity sets");
  search_cmd->add_option("--order", search_order, "model order")->required();
  search_cmd->add_option("--identity", search_identities,
                         "identity to enforce (repeatable)");
  search_cmd->add_flag("--idempotent", search_idempotent, "require x*x = x");
  CLI::Option* count_flag =
      search_cmd->add_flag("--count", search_count, "count all models instead of finding one");
  search_cmd->add_option("--limit", search_limit, "enumerate up to this many witnesses")
      ->excludes(count_flag);
  search_cmd->add_option("--budget", search_budget, "node budget");

  // product
  std::vector<std::string> product_tables;
  CLI::App* product = app.add_subcommand("product", "Direct product of table files");
  product->add_option("--table", product_tables, "factor table file (repeat; left fold)")
      ->required()
      ->expected(2, -1);

  // compose
  std::string compose_pbd;
  std::vector<std::string> compose_models;
  CLI::App* compose = app.add_subcommand(
      "compose", "Compose a model from a lambda=1 design and idempotent block models");
  compose->add_option("--pbd", compose_pbd, "design file: 'v lambda' then one block per line")
      ->required();
  compose->add_option("--model", compose_models, "SIZE=TABLEFILE (repeatable)")->required();

  // spectrum
  int spectrum_max = 0;
  bool spectrum_idempotent = false;
  long long spectrum_budget = 1'000'000;  // enough to settle order 6 out of the box
  CLI::App* spectrum =
      app.add_subcommand("spectrum", "Per-order existence report for x*(y*(y*x)) = y");
  spectrum->add_option("--max", spectrum_max, "largest order to report")->required();
  spectrum->add_flag("--idempotent", spectrum_idempotent, "restrict to idempotent models");
  spectrum->add_option("--budget", spectrum_budget, "search node budget per order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return run_verify(verify_table, verify_identity);
    if (*modular) return run_construct_modular(cm_modulus, cm_k, cm_b);
    if (*twopower) return run_construct_twopower(tp_k);
    if (*scan) return run_scan(scan_from, scan_to, scan_factor, scan_audit);
    if (*search_cmd)
      return run_search(search_order, search_identities, search_idempotent, search_count,
                        search_limit, search_budget);
    if (*product) return run_product(product_tables);
    if (*compose) return run_compose(compose_pbd, compose_models);
    if (*spectrum) return run_spectrum(spectrum_max, spectrum_idempotent, spectrum_budget);
  } catch (const qg::Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}
