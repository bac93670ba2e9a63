#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qg/cayley_table.hpp"
#include "qg/error.hpp"

namespace qg {

namespace detail {

inline long long mod_reduce(long long value, long long modulus) {
  long long r = value % modulus;
  return r < 0 ? r + modulus : r;
}

inline long long mod_mul(long long a, long long b, long long modulus) {
  return static_cast<long long>((static_cast<__int128>(a) * b) % modulus);
}

inline long long mod_pow(long long base, int exponent, long long modulus) {
  if (modulus == 1) return 0;
  long long result = 1 % modulus;
  base = mod_reduce(base, modulus);
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) result = mod_mul(result, base, modulus);
    base = mod_mul(base, base, modulus);
  }
  return result;
}

/// k^5 + k^4 + 1 reduced mod r, safe for any residue.
inline long long f_mod(long long k, long long r) {
  long long k4 = mod_pow(k, 4, r);
  long long k5 = mod_mul(k4, mod_reduce(k, r), r);
  return mod_reduce(k5 + k4 + 1, r);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Linear form x*y = a*x + c*y + b over Z_n.

/// Both multipliers must be invertible mod n so the form is a quasigroup.
/// Coefficients are canonicalized into [0, n).
struct TQuasigroupForm {
  long long modulus;
  long long a;  // left multiplier
  long long c;  // right multiplier
  long long b;  // constant

  TQuasigroupForm(long long n, long long a_in, long long c_in, long long b_in)
      : modulus(n),
        a(detail::mod_reduce(a_in, n)),
        c(detail::mod_reduce(c_in, n)),
        b(detail::mod_reduce(b_in, n)) {
    if (n < 1) throw FormatError("modulus must be positive");
    if (std::gcd(a, n) != 1) throw NotInvertible(a, n);
    if (std::gcd(c, n) != 1) throw NotInvertible(c, n);
  }
};

/// The three conditions under which the form satisfies x*(y*(y*x)) = y:
/// a = -c^3, c^5 + c^4 + 1 = 0 and (c^2 + c + 1) b = 0, all in Z_n.
struct ConditionReport {
  bool phi_ok;
  bool psi_ok;
  bool b_ok;

  bool all() const { return phi_ok && psi_ok && b_ok; }
};

inline ConditionReport check_t_conditions(const TQuasigroupForm& form) {
  const long long n = form.modulus;
  ConditionReport report{};
  report.phi_ok = detail::mod_reduce(form.a + detail::mod_pow(form.c, 3, n), n) == 0;
  report.psi_ok = detail::f_mod(form.c, n) == 0;
  long long quad = detail::mod_reduce(detail::mod_pow(form.c, 2, n) + form.c + 1, n);
  report.b_ok = detail::mod_mul(quad, form.b, n) == 0;
  return report;
}

inline CayleyTable materialize(const TQuasigroupForm& form) {
  if (form.modulus > kDefaultMaxOrder) throw OrderLimitExceeded(form.modulus, kDefaultMaxOrder);
  const int n = static_cast<int>(form.modulus);
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    long long row_base = detail::mod_reduce(form.a * x + form.b, n);
    for (int y = 0; y < n; ++y)
      cells[static_cast<std::size_t>(x) * n + y] =
          static_cast<int>(detail::mod_reduce(row_base + form.c * y, n));
  }
  return CayleyTable(n, std::move(cells));
}

// ---------------------------------------------------------------------------
// Root scanning for f(k) = k^5 + k^4 + 1.

inline constexpr long long kFValueLimit = 4096;  // 2^(60/5); keeps k^5 inside int64

/// Exact integer k^5 + k^4 + 1.
inline long long f_value(long long k) {
  if (k > kFValueLimit || k < -kFValueLimit)
    throw Overflow("f(" + std::to_string(k) + ") would overflow 64-bit arithmetic");
  long long k2 = k * k;
  long long k4 = k2 * k2;
  return k4 * k + k4 + 1;
}

/// All k in {0..r-1} with f(k) = 0 (mod r), ascending. For r = 1 this is {0}.
inline std::vector<long long> scan_roots(long long r) {
  if (r < 1) throw FormatError("modulus must be positive");
  std::vector<long long> roots;
  for (long long k = 0; k < r; ++k)
    if (detail::f_mod(k, r) == 0) roots.push_back(k);
  return roots;
}

/// Solutions b of (k^2 + k + 1) b = 0 (mod r): the gcd((k^2+k+1) mod r, r)
/// multiples of r / gcd, ascending. Zero is always included.
inline std::vector<long long> b_solutions(long long r, long long k) {
  if (r < 1) throw FormatError("modulus must be positive");
  long long g = detail::mod_reduce(detail::mod_pow(k, 2, r) + detail::mod_reduce(k, r) + 1, r);
  long long d = std::gcd(g, r);  // g = 0 gives d = r: every residue solves it
  std::vector<long long> out;
  out.reserve(static_cast<std::size_t>(d));
  long long step = r / d;
  for (long long i = 0; i < d; ++i) out.push_back(i * step);
  return out;
}

/// Form x*y = (-k^3) x + k y + b over Z_r, defined whenever k is a root of f
/// mod r, invertible mod r, and b solves its congruence. Negative k and b are
/// canonicalized into [0, r) first.
inline TQuasigroupForm build_t_form(long long r, long long k, long long b = 0) {
  if (r < 1) throw FormatError("modulus must be positive");
  long long kk = detail::mod_reduce(k, r);
  long long bb = detail::mod_reduce(b, r);
  if (detail::f_mod(kk, r) != 0) throw NotARoot(k, r);
  if (std::gcd(kk, r) != 1) throw NotInvertible(kk, r);
  long long g = detail::mod_reduce(detail::mod_pow(kk, 2, r) + kk + 1, r);
  if (detail::mod_mul(g, bb, r) != 0) throw BadConstant(b, r);
  long long a = detail::mod_reduce(-detail::mod_pow(kk, 3, r), r);
  return TQuasigroupForm(r, a, kk, bb);
}

// ---------------------------------------------------------------------------
// Factorization (trial division; the scan range keeps values below a few
// million, far inside its comfort zone).

inline std::vector<unsigned long long> factorize(unsigned long long m) {
  std::vector<unsigned long long> factors;
  for (unsigned long long p = 2; p * p <= m; p += (p == 2 ? 1 : 2))
    while (m % p == 0) {
      factors.push_back(p);
      m /= p;
    }
  if (m > 1) factors.push_back(m);
  return factors;
}

inline bool is_prime(unsigned long long m) {
  if (m < 2) return false;
  for (unsigned long long p = 2; p * p <= m; p += (p == 2 ? 1 : 2))
    if (m % p == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Polynomial scan.

struct PolynomialScanEntry {
  long long k;
  long long value;                                  // f(k), exact
  std::vector<unsigned long long> prime_factors;    // of |f(k)|, ascending with multiplicity
};

struct PolynomialScanReport {
  std::vector<PolynomialScanEntry> entries;          // k ascending
  std::vector<unsigned long long> prime_divisors;    // deduplicated union, ascending
};

inline PolynomialScanReport scan_polynomial(long long k_from, long long k_to) {
  if (k_from > k_to) throw FormatError("empty scan range");
  PolynomialScanReport report;
  for (long long k = k_from; k <= k_to; ++k) {
    long long value = f_value(k);
    unsigned long long magnitude =
        value < 0 ? static_cast<unsigned long long>(-value) : static_cast<unsigned long long>(value);
    report.entries.push_back({k, value, factorize(magnitude)});
  }
  std::vector<unsigned long long> all;
  for (const auto& entry : report.entries)
    all.insert(all.end(), entry.prime_factors.begin(), entry.prime_factors.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  report.prime_divisors = std::move(all);
  return report;
}

// ---------------------------------------------------------------------------
// Reference audit. An external tabulation of f over k = -20..20 circulates
// with two defects (one k listed twice, one k absent) and a "prime divisor"
// set that mixes in composites. The audit recomputes everything and itemizes
// each disagreement instead of trusting the tabulation.

struct ReferenceValueRow {
  long long k;
  long long listed;    // value the tabulation claims
  long long computed;  // f(k) recomputed here
  bool matches;
};

struct ScanReferenceAudit {
  std::vector<ReferenceValueRow> value_rows;              // in tabulated order
  std::vector<long long> duplicated_ks;                   // k listed more than once
  std::vector<long long> missing_ks;                      // nonzero k in [-20, 20] absent
  std::vector<long long> inconsistent_duplicate_ks;       // duplicates whose listed values differ
  std::vector<unsigned long long> recomputed_prime_divisors;
  std::vector<long long> composite_listed_divisors;       // listed entries that are not prime
  std::vector<long long> listed_not_recomputed;           // listed entries outside the true set
  std::vector<long long> recomputed_not_listed;            // true primes the tabulation omits
};

/// Tabulated (k, f(k)) rows, in publication order. k = 12 appears twice and
/// k = 16 is missing; every listed value itself checks out.
inline const std::vector<std::pair<long long, long long>>& reference_f_values() {
  static const std::vector<std::pair<long long, long long>> rows = {
      {-20, -3039999}, {-19, -2345777}, {-18, -1784591}, {-17, -1336335},
      {-16, -983039},  {-15, -708749},  {-14, -499407},  {-13, -342731},
      {-12, -228095},  {-11, -146409},  {-10, -89999},   {-9, -52487},
      {-8, -28671},    {-7, -14405},    {-6, -6479},     {-5, -2499},
      {-4, -767},      {-3, -161},      {-2, -15},       {-1, 1},
      {1, 3},          {2, 49},         {3, 325},        {4, 1281},
      {5, 3751},       {6, 9073},       {7, 19209},      {8, 36865},
      {9, 65611},      {10, 110001},    {11, 175693},    {12, 269569},
      {13, 399855},    {14, 576241},    {15, 810001},    {12, 269569},
      {17, 1503379},   {18, 1994545},   {19, 2606421},   {20, 3360001},
  };
  return rows;
}

/// The tabulation's claimed divisor set, verbatim. Not all entries are prime.
inline const std::vector<long long>& reference_divisor_set() {
  static const std::vector<long long> divisors = {
      3,      5,      7,       13,     19,     23,    37,    43,    59,
      61,     73,     101,     157,    211,    241,   307,   341,   347,
      421,    503,    719,     833,    977,    979,   1163,  1319,  2183,
      2881,   3359,   3751,    5047,   5813,   6403,  7373,  9073,  10033,
      25099,  36667,  166469,  269569, 868807, 1503379,
  };
  return divisors;
}

inline ScanReferenceAudit audit_scan_reference() {
  ScanReferenceAudit audit;

  std::vector<long long> seen;
  for (const auto& [k, listed] : reference_f_values()) {
    long long computed = f_value(k);
    audit.value_rows.push_back({k, listed, computed, listed == computed});
    seen.push_back(k);
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 0; i + 1 < seen.size(); ++i)
    if (seen[i] == seen[i + 1] &&
        (audit.duplicated_ks.empty() || audit.duplicated_ks.back() != seen[i]))
      audit.duplicated_ks.push_back(seen[i]);
  for (long long k : audit.duplicated_ks) {
    long long first = 0;
    bool inconsistent = false, have_first = false;
    for (const auto& [kk, listed] : reference_f_values())
      if (kk == k) {
        if (!have_first) {
          first = listed;
          have_first = true;
        } else if (listed != first) {
          inconsistent = true;
        }
      }
    if (inconsistent) audit.inconsistent_duplicate_ks.push_back(k);
  }
  for (long long k = -20; k <= 20; ++k) {
    if (k == 0) continue;
    if (!std::binary_search(seen.begin(), seen.end(), k)) audit.missing_ks.push_back(k);
  }

  // True prime set over the same domain.
  std::vector<unsigned long long> primes;
  for (long long k = -20; k <= 20; ++k) {
    if (k == 0) continue;
    long long value = f_value(k);
    unsigned long long magnitude =
        value < 0 ? static_cast<unsigned long long>(-value) : static_cast<unsigned long long>(value);
    for (unsigned long long p : factorize(magnitude)) primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  audit.recomputed_prime_divisors = primes;

  auto in_recomputed = [&](long long v) {
    return v > 0 && std::binary_search(primes.begin(), primes.end(),
                                       static_cast<unsigned long long>(v));
  };
  for (long long d : reference_divisor_set()) {
    if (!is_prime(static_cast<unsigned long long>(d)))
      audit.composite_listed_divisors.push_back(d);
    if (!in_recomputed(d)) audit.listed_not_recomputed.push_back(d);
  }
  for (unsigned long long p : primes) {
    const auto& listed = reference_divisor_set();
    if (std::find(listed.begin(), listed.end(), static_cast<long long>(p)) == listed.end())
      audit.recomputed_not_listed.push_back(static_cast<long long>(p));
  }
  return audit;
}

}  // namespace qg
