#include "quartet/search.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <limits>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace quartet {

namespace {

using ClassKey = std::array<Int, 4>;
using ClassCounts = std::map<ClassKey, long>;

template <class Key>
struct Entry {
  Key key;
  std::uint32_t x;
  std::uint32_t y;
};

template <class Key>
bool entry_less(const Entry<Key>& l, const Entry<Key>& r) {
  if (l.key != r.key) return l.key < r.key;
  if (l.x != r.x) return l.x < r.x;
  return l.y < r.y;
}

struct Cleared {
  Int m;  // numerator of a
  Int n;  // denominator of a (> 0)
};

template <class Key>
Key to_key(const Int& v);

template <>
std::int64_t to_key<std::int64_t>(const Int& v) {
  return v.get_si();
}

template <>
Int to_key<Int>(const Int& v) {
  return v;
}

// Per-thread key arithmetic; x^4 tables are shared and read-only.
template <class Key>
struct KeyMaker {
  Key n, m;
  std::vector<Key> fourth;
  KeyMaker(const Cleared& c, long bound) : n(to_key<Key>(c.n)), m(to_key<Key>(c.m)) {
    fourth.reserve(static_cast<std::size_t>(bound) + 1);
    for (long i = 0; i <= bound; ++i) {
      Int f = Int(i) * i * i * i;
      fourth.push_back(to_key<Key>(f));
    }
  }
  Key operator()(std::uint32_t x, std::uint32_t y) const { return n * fourth[x] + m * fourth[y]; }
};

int effective_workers(const SearchConfig& cfg) { return std::max(1, cfg.workers); }

// Integer-only shortcut for the two bulk sources of trivial matches:
// (x, y) ~ (y, x) at a = 1 and (x, x) ~ (y, y) at a = -1. Anything else
// goes through the full orbit test.
bool obviously_trivial(const SearchConfig& cfg, std::uint32_t A, std::uint32_t B, std::uint32_t C,
                       std::uint32_t D) {
  if (!cfg.a.is_integer()) return false;
  if (cfg.a == Rat(1)) return A == D && B == C;
  if (cfg.a == Rat(-1)) return A == B && C == D;
  return false;
}

void record_match(const SearchConfig& cfg, std::uint32_t A, std::uint32_t B, std::uint32_t C,
                  std::uint32_t D, ClassCounts& counts) {
  if (obviously_trivial(cfg, A, B, C, D)) return;
  Quadruple raw(Int(A), Int(B), Int(C), Int(D), cfg.a);
  if (is_trivial(raw)) return;
  const Quadruple canon = canonicalize(raw);
  ++counts[canon.entries()];
}

std::vector<SearchHit> finish(const SearchConfig& cfg, const ClassCounts& counts) {
  std::vector<SearchHit> out;
  out.reserve(counts.size());
  Rat coefficient = coefficient_representatives(Quadruple(1, 0, 0, 0, cfg.a)).front().a;
  for (const auto& [key, count] : counts) {
    Quadruple q(key[0], key[1], key[2], key[3], coefficient);
    if (!verify_quadruple(q).is_zero()) {
      throw std::logic_error("search produced a non-solution " + q.str());
    }
    out.push_back({std::move(q), count});
  }
  return out;
}

Cleared cleared(const SearchConfig& cfg) { return {cfg.a.num(), cfg.a.den()}; }

template <class Key>
std::vector<SearchHit> parallel_search(const SearchConfig& cfg) {
  const long bound = cfg.bound;
  const std::uint32_t lo = cfg.include_zero ? 0 : 1;
  const std::uint32_t hi = static_cast<std::uint32_t>(bound);
  const std::size_t side = hi - lo + 1;
  const int workers = effective_workers(cfg);
  const KeyMaker<Key> make(cleared(cfg), bound);

  std::vector<Entry<Key>> index(side * side);
#pragma omp parallel for num_threads(workers) schedule(static)
  for (long i = 0; i < static_cast<long>(side); ++i) {
    const auto x = static_cast<std::uint32_t>(lo + i);
    for (std::size_t j = 0; j < side; ++j) {
      const auto y = static_cast<std::uint32_t>(lo + j);
      index[static_cast<std::size_t>(i) * side + j] = {make(x, y), x, y};
    }
  }

  // Sort contiguous chunks independently, then merge neighbours pairwise.
  const std::size_t total = index.size();
  const std::size_t chunks = static_cast<std::size_t>(workers);
  std::vector<std::size_t> cut(chunks + 1);
  for (std::size_t c = 0; c <= chunks; ++c) cut[c] = total * c / chunks;
#pragma omp parallel for num_threads(workers) schedule(static)
  for (long c = 0; c < static_cast<long>(chunks); ++c) {
    const auto uc = static_cast<std::size_t>(c);
    std::sort(index.begin() + static_cast<std::ptrdiff_t>(cut[uc]),
              index.begin() + static_cast<std::ptrdiff_t>(cut[uc + 1]), entry_less<Key>);
  }
  for (std::size_t width = 1; width < chunks; width *= 2) {
#pragma omp parallel for num_threads(workers) schedule(static)
    for (long c = 0; c < static_cast<long>(chunks); c += static_cast<long>(2 * width)) {
      const auto uc = static_cast<std::size_t>(c);
      if (uc + width >= chunks) continue;
      const std::size_t end = std::min(uc + 2 * width, chunks);
      std::inplace_merge(index.begin() + static_cast<std::ptrdiff_t>(cut[uc]),
                         index.begin() + static_cast<std::ptrdiff_t>(cut[uc + width]),
                         index.begin() + static_cast<std::ptrdiff_t>(cut[end]), entry_less<Key>);
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> runs;
  for (std::size_t start = 0; start < total;) {
    std::size_t stop = start + 1;
    while (stop < total && index[stop].key == index[start].key) ++stop;
    if (stop - start >= 2) runs.emplace_back(start, stop);
    start = stop;
  }

  std::vector<ClassCounts> local(chunks);
  std::exception_ptr failure;
#pragma omp parallel num_threads(workers)
  {
#ifdef _OPENMP
    const auto me = static_cast<std::size_t>(omp_get_thread_num());
#else
    const std::size_t me = 0;
#endif
#pragma omp for schedule(dynamic, 16)
    for (long r = 0; r < static_cast<long>(runs.size()); ++r) {
      try {
        const auto [first, last] = runs[static_cast<std::size_t>(r)];
        for (std::size_t i = first; i < last; ++i) {
          for (std::size_t j = i + 1; j < last; ++j) {
            record_match(cfg, index[i].x, index[i].y, index[j].x, index[j].y, local[me]);
          }
        }
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  ClassCounts merged;
  for (const auto& part : local) {
    for (const auto& [key, count] : part) merged[key] += count;
  }
  return finish(cfg, merged);
}

}  // namespace

void validate(const SearchConfig& cfg) {
  if (cfg.a.is_zero()) throw DomainError("search coefficient a must be nonzero");
  if (cfg.bound < 1) throw DomainError("search bound must be >= 1");
  if (cfg.bound > static_cast<long>(std::numeric_limits<std::uint32_t>::max() / 2)) {
    throw DomainError("search bound too large");
  }
}

KeyWidth select_key_width(const SearchConfig& cfg) {
  const Int n4 = Int(cfg.bound) * cfg.bound * cfg.bound * cfg.bound;
  const Int worst = (cfg.a.den() + abs(cfg.a.num())) * n4;
  return worst <= Int(std::numeric_limits<std::int64_t>::max()) ? KeyWidth::Native64
                                                                  : KeyWidth::Exact;
}

std::size_t estimate_index_bytes(const SearchConfig& cfg) {
  const auto side = static_cast<std::size_t>(cfg.bound) + 1;
  std::size_t per_entry = sizeof(Entry<std::int64_t>);
  if (select_key_width(cfg) == KeyWidth::Exact) {
    const Int n4 = Int(cfg.bound) * cfg.bound * cfg.bound * cfg.bound;
    const Int worst = (cfg.a.den() + abs(cfg.a.num())) * n4;
    per_entry = sizeof(Entry<Int>) + mpz_size(worst.get_mpz_t()) * sizeof(mp_limb_t);
  }
  return side * side * per_entry;
}

std::vector<SearchHit> brute_search(const SearchConfig& cfg) {
  return brute_search(cfg, select_key_width(cfg));
}

std::vector<SearchHit> brute_search(const SearchConfig& cfg, KeyWidth width) {
  validate(cfg);
  if (width == KeyWidth::Native64) {
    if (select_key_width(cfg) != KeyWidth::Native64) {
      throw DomainError("search keys do not fit in 64 bits for this bound and coefficient");
    }
    return parallel_search<std::int64_t>(cfg);
  }
  return parallel_search<Int>(cfg);
}

std::vector<SearchHit> brute_search_reference(const SearchConfig& cfg) {
  validate(cfg);
  const Cleared c = cleared(cfg);
  std::map<Int, std::vector<std::pair<std::uint32_t, std::uint32_t>>> buckets;
  const std::uint32_t lo = cfg.include_zero ? 0 : 1;
  const auto hi = static_cast<std::uint32_t>(cfg.bound);
  for (std::uint32_t x = lo; x <= hi; ++x) {
    for (std::uint32_t y = lo; y <= hi; ++y) {
      Int key = c.n * Int(x) * x * x * x + c.m * Int(y) * y * y * y;
      buckets[key].emplace_back(x, y);
    }
  }
  ClassCounts counts;
  for (const auto& [key, pairs] : buckets) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        record_match(cfg, pairs[i].first, pairs[i].second, pairs[j].first, pairs[j].second, counts);
      }
    }
  }
  return finish(cfg, counts);
}

bool CrossCheckReport::ok() const {
  return std::none_of(entries.begin(), entries.end(), [](const CrossCheckEntry& e) {
    return e.status == CrossCheckStatus::Missing;
  });
}

std::string_view to_string(CrossCheckStatus s) {
  switch (s) {
    case CrossCheckStatus::Found: return "found";
    case CrossCheckStatus::Missing: return "MISSING";
    case CrossCheckStatus::OutOfRange: return "out-of-range";
    case CrossCheckStatus::CoefficientMismatch: return "coefficient-mismatch";
    case CrossCheckStatus::Degenerate: return "degenerate";
  }
  return "?";
}

namespace {

// Some orbit element of k, rewritten for coefficient `target`, lies in the box.
bool fits_search_box(const Quadruple& k, const SearchConfig& cfg) {
  const auto fourth_root = [](const Rat& v) -> std::optional<Rat> {
    auto s = rat_sqrt(v);
    return s ? rat_sqrt(*s) : std::nullopt;
  };
  for (const auto& e : orbit(k)) {
    // target = c * sigma^4 keeps (A, B/sigma, C, D/sigma); 1/target = c * sigma^4
    // uses the pair swap (B/sigma, A, D/sigma, C).
    for (int swapped = 0; swapped < 2; ++swapped) {
      const Rat ratio = (swapped ? cfg.a.inverse() : cfg.a) / e.a;
      auto sigma = fourth_root(ratio);
      if (!sigma) continue;
      std::vector<Rat> v = swapped
                               ? std::vector<Rat>{Rat(e.B) / *sigma, Rat(e.A), Rat(e.D) / *sigma, Rat(e.C)}
                               : std::vector<Rat>{Rat(e.A), Rat(e.B) / *sigma, Rat(e.C), Rat(e.D) / *sigma};
      const auto ints = clear_and_normalize(v);
      const bool in_box = std::all_of(ints.begin(), ints.end(), [&](const Int& x) {
        return abs(x) <= cfg.bound && (cfg.include_zero || x != 0);
      });
      if (in_box) return true;
    }
  }
  return false;
}

}  // namespace

CrossCheckReport cross_check_families(const SearchConfig& cfg,
                                      const std::vector<std::pair<FamilyId, Rat>>& items) {
  validate(cfg);
  const auto hits = brute_search(cfg);
  const Rat target_class = coefficient_representatives(Quadruple(1, 0, 0, 0, cfg.a)).front().a;
  CrossCheckReport report;
  for (const auto& [family, param] : items) {
    CrossCheckEntry entry{family, param, std::nullopt, CrossCheckStatus::Found, ""};
    try {
      entry.canonical = generate(family, param, Mode::Canonical);
    } catch (const DomainError& e) {
      entry.status = CrossCheckStatus::Degenerate;
      entry.detail = e.what();
      report.entries.push_back(std::move(entry));
      continue;
    }
    const Quadruple& k = *entry.canonical;
    if (is_trivial(k)) {
      entry.status = CrossCheckStatus::Degenerate;
      entry.detail = "trivial solution";
    } else if (k.a != target_class) {
      entry.status = CrossCheckStatus::CoefficientMismatch;
      entry.detail = "family coefficient class " + k.a.str() + " vs search " + target_class.str();
    } else if (!fits_search_box(k, cfg)) {
      entry.status = CrossCheckStatus::OutOfRange;
      entry.detail = "no orbit element within bound " + std::to_string(cfg.bound);
    } else {
      const bool found = std::any_of(hits.begin(), hits.end(),
                                     [&](const SearchHit& h) { return h.quad == k; });
      entry.status = found ? CrossCheckStatus::Found : CrossCheckStatus::Missing;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace quartet
