#pragma once

// Brute-force oracle for A^4 + aB^4 = C^4 + aD^4 over 0 <= A, B, C, D <= N.
//
// With a = m/n the search runs on the cleared form nA^4 + mB^4 = nC^4 + mD^4:
// every pair (x, y) contributes the key n x^4 + m y^4, and two distinct pairs
// with equal keys form a solution. The index holds (N + 1)^2 entries, so
// memory is O(N^2); estimate_index_bytes() reports the figure up front.
//
// brute_search() is the OpenMP kernel (parallel fill, chunked sort + merge,
// join partitioned over runs of equal keys). brute_search_reference() is the
// serial hash-join it is tested against. Both return identical, sorted
// output for every worker count.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quartet/exactnum.hpp"
#include "quartet/families.hpp"
#include "quartet/quartic.hpp"

namespace quartet {

struct SearchConfig {
  Rat a;
  long bound = 1;
  bool include_zero = true;
  int workers = 1;
};

struct SearchHit {
  Quadruple quad;    // canonical and primitive
  long witnesses;    // raw (A, B) / (C, D) index pairs mapping to this class
  friend bool operator==(const SearchHit&, const SearchHit&) = default;
};

enum class KeyWidth { Native64, Exact };

/// Native 64-bit keys when (n + |m|) N^4 provably fits, else exact integers.
KeyWidth select_key_width(const SearchConfig& cfg);
std::size_t estimate_index_bytes(const SearchConfig& cfg);

/// Throws DomainError for a == 0 or bound < 1.
void validate(const SearchConfig& cfg);

std::vector<SearchHit> brute_search(const SearchConfig& cfg);
/// Same contract, but forces the key representation (for testing both paths).
std::vector<SearchHit> brute_search(const SearchConfig& cfg, KeyWidth width);
std::vector<SearchHit> brute_search_reference(const SearchConfig& cfg);

enum class CrossCheckStatus { Found, Missing, OutOfRange, CoefficientMismatch, Degenerate };

struct CrossCheckEntry {
  FamilyId family;
  Rat param;
  std::optional<Quadruple> canonical;
  CrossCheckStatus status;
  std::string detail;
};

struct CrossCheckReport {
  std::vector<CrossCheckEntry> entries;
  /// True when nothing is Missing.
  bool ok() const;
};

/// For every (family, param): generate the canonical quadruple; if its
/// coefficient class matches cfg.a and some orbit element fits in the search
/// box, it must appear in brute_search(cfg).
CrossCheckReport cross_check_families(const SearchConfig& cfg,
                                      const std::vector<std::pair<FamilyId, Rat>>& items);

std::string_view to_string(CrossCheckStatus s);

}  // namespace quartet
