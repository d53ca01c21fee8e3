#pragma once

// Recursive construction of the finite-level Dirichlet and Neumann spectra
//
//   A_1^D = {2,5}   A_2^D = Phi_{+-}(A_1^D) u {5,6}
//   A_m^D = Phi_{+-}(A_{m-1}^D \ {6}) u {3,5,6}          m >= 3
//
//   A_0^N = {0,6}   A_1^N = {0,3,6}
//   A_m^N = Phi_{+-}(A_{m-1}^N \ {6}) u {3,6}            m >= 2
//
// with a descriptor per entry tracing seed, generation of birth and branch
// word. The re-added value 3 is the successor Phi_+(6) of the previous
// level's eigenvalue 6, so it carries seed 6, birth m-1 and word "+"; the
// Neumann value 5 = Phi_+(0) belongs to the 0 lineage. Entries are sorted
// with certified comparisons; an Overlap between two entries doubles the
// working precision instead of guessing (distinct decimation values are
// distinct reals).

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "sgspec/dynamics.hpp"

namespace sgspec {

enum class BoundaryCondition { Dirichlet, Neumann };

inline const char* bc_name(BoundaryCondition bc) {
  return bc == BoundaryCondition::Dirichlet ? "dirichlet" : "neumann";
}

struct EigenDescriptor {
  int seed = 0;     // Dirichlet lineages start at 2, 5 or 6; Neumann at 0 or 6
  int birth = 0;    // generation of birth
  BranchWord word;  // letters chosen after birth, w_1 first

  int level() const { return birth + static_cast<int>(word.size()); }

  // Generation of fixation of the lineage continued by Phi_- forever:
  // the level where the first letter of the all-minus tail lands.
  int continued_fixation() const {
    return birth + static_cast<int>(word.last_plus_index()) + 1;
  }

  // Fixation reached within the recorded word, if any. A lineage is fixed
  // once a '-' follows its last '+' (or the word is nonempty all-minus).
  std::optional<int> fixation() const {
    int f = continued_fixation();
    if (f <= level()) return f;
    return std::nullopt;
  }

  bool operator==(const EigenDescriptor& other) const {
    return seed == other.seed && birth == other.birth && word == other.word;
  }
};

struct SpectrumEntry {
  Ball value;
  EigenDescriptor descriptor;
};

class FiniteSpectrum {
 public:
  FiniteSpectrum(int level, BoundaryCondition bc, mpfr_prec_t precision,
                 std::vector<SpectrumEntry> entries)
      : level_(level), bc_(bc), precision_(precision), entries_(std::move(entries)) {}

  int level() const { return level_; }
  BoundaryCondition bc() const { return bc_; }
  mpfr_prec_t precision() const { return precision_; }
  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const SpectrumEntry& at(std::size_t i) const { return entries_.at(i); }

  std::vector<Ball> values() const {
    std::vector<Ball> v;
    v.reserve(entries_.size());
    for (const auto& e : entries_) v.push_back(e.value);
    return v;
  }

  // Entries excluding the exact eigenvalue 6 (the set A_m \ {6}).
  std::vector<SpectrumEntry> entries_without_six() const {
    std::vector<SpectrumEntry> v;
    v.reserve(entries_.size());
    for (const auto& e : entries_) {
      if (is_exact_six(e.value)) continue;
      v.push_back(e);
    }
    return v;
  }

  static bool is_exact_six(const Ball& b) {
    return b.exact() && mpfr_cmp_si(b.mid(), 6) == 0;
  }

 private:
  int level_;
  BoundaryCondition bc_;
  mpfr_prec_t precision_;
  std::vector<SpectrumEntry> entries_;
};

using SpectrumPtr = std::shared_ptr<const FiniteSpectrum>;

inline long long count_with_multiplicity(int m) {
  if (m < 1) throw DomainError("count_with_multiplicity: level must be >= 1");
  if (m > 38) throw DomainError("count_with_multiplicity: 3^{m+1} exceeds 64 bits");
  long long p = 1;
  for (int i = 0; i < m + 1; ++i) p *= 3;
  return (p - 3) / 2;
}

namespace detail {

inline SpectrumEntry make_seed(long value, int birth, mpfr_prec_t prec) {
  return SpectrumEntry{Ball(value, prec),
                       EigenDescriptor{static_cast<int>(value), birth, BranchWord{}}};
}

// Successor of the previous level's 6 through Phi_+; value is exactly 3.
inline SpectrumEntry make_three(int level, mpfr_prec_t prec) {
  return SpectrumEntry{Ball(3, prec),
                       EigenDescriptor{6, level - 1, BranchWord::parse("+")}};
}

inline std::vector<SpectrumEntry> level_base(int m, BoundaryCondition bc, mpfr_prec_t prec) {
  std::vector<SpectrumEntry> out;
  if (bc == BoundaryCondition::Dirichlet) {
    out.push_back(make_seed(2, 1, prec));
    out.push_back(make_seed(5, 1, prec));
  } else if (m == 0) {
    out.push_back(make_seed(0, 0, prec));
    out.push_back(make_seed(6, 0, prec));
  } else {
    out.push_back(SpectrumEntry{Ball(0, prec), EigenDescriptor{0, 0, BranchWord::parse("-")}});
    out.push_back(make_three(1, prec));
    out.push_back(make_seed(6, 1, prec));
  }
  return out;
}

inline std::vector<SpectrumEntry> level_step(const FiniteSpectrum& parent, int m,
                                             mpfr_prec_t prec) {
  std::vector<SpectrumEntry> out;
  out.reserve(2 * parent.size() + 3);
  for (const auto& e : parent.entries_without_six()) {
    out.push_back(SpectrumEntry{phi(Branch::Minus, e.value),
                                EigenDescriptor{e.descriptor.seed, e.descriptor.birth,
                                                e.descriptor.word.appended(Branch::Minus)}});
    out.push_back(SpectrumEntry{phi(Branch::Plus, e.value),
                                EigenDescriptor{e.descriptor.seed, e.descriptor.birth,
                                                e.descriptor.word.appended(Branch::Plus)}});
  }
  if (parent.bc() == BoundaryCondition::Dirichlet) {
    if (m >= 3) out.push_back(make_three(m, prec));
    out.push_back(make_seed(5, m, prec));
    out.push_back(make_seed(6, m, prec));
  } else {
    out.push_back(make_three(m, prec));
    out.push_back(make_seed(6, m, prec));
  }
  return out;
}

// Sort by midpoint, then demand certified strict order between neighbours.
inline bool sort_certified(std::vector<SpectrumEntry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    return mpfr_cmp(a.value.mid(), b.value.mid()) < 0;
  });
  for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
    if (certified_compare(entries[i].value, entries[i + 1].value) != Order::Less) {
      return false;
    }
  }
  return true;
}

struct SpectrumCache {
  std::mutex mutex;
  std::map<std::tuple<int, int, mpfr_prec_t>, SpectrumPtr> levels;
};

inline SpectrumCache& spectrum_cache() {
  static SpectrumCache cache;
  return cache;
}

// Builds level m at exactly `prec`; returns nullptr when certified sorting
// fails at this precision (caller escalates).
inline SpectrumPtr build_chain(int m, BoundaryCondition bc, mpfr_prec_t prec) {
  auto& cache = spectrum_cache();
  auto key = std::make_tuple(static_cast<int>(bc), m, prec);
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto it = cache.levels.find(key);
    if (it != cache.levels.end()) return it->second;
  }
  // Base cases: A_1^D = {2,5}; A_0^N = {0,6} and A_1^N = {0,3,6} are both
  // given, the Neumann recursion starts at m = 2 (so 5 = Phi_+(0) is absent
  // from A_1^N).
  std::vector<SpectrumEntry> entries;
  if (m <= 1) {
    entries = level_base(m, bc, prec);
  } else {
    SpectrumPtr parent = build_chain(m - 1, bc, prec);
    if (!parent) return nullptr;
    entries = level_step(*parent, m, prec);
  }
  if (!sort_certified(entries)) return nullptr;
  auto made = std::make_shared<const FiniteSpectrum>(m, bc, prec, std::move(entries));
  std::lock_guard<std::mutex> lock(cache.mutex);
  auto [it, inserted] = cache.levels.emplace(key, made);
  return it->second;
}

}  // namespace detail

inline SpectrumPtr finite_spectrum(int m, BoundaryCondition bc,
                                   mpfr_prec_t precision = Ball::kDefaultPrecision,
                                   int max_doublings = 6) {
  if (bc == BoundaryCondition::Dirichlet && m < 1) {
    throw DomainError("dirichlet_level: A_0 is empty, level must be >= 1");
  }
  if (bc == BoundaryCondition::Neumann && m < 0) {
    throw DomainError("neumann_level: level must be >= 0");
  }
  mpfr_prec_t prec = precision;
  for (int attempt = 0; attempt <= max_doublings; ++attempt, prec *= 2) {
    SpectrumPtr s = detail::build_chain(m, bc, prec);
    if (s) return s;
  }
  throw ToleranceNotReached("finite_spectrum: could not separate entries below precision cap");
}

inline SpectrumPtr dirichlet_level(int m, mpfr_prec_t precision = Ball::kDefaultPrecision) {
  return finite_spectrum(m, BoundaryCondition::Dirichlet, precision);
}

inline SpectrumPtr neumann_level(int m, mpfr_prec_t precision = Ball::kDefaultPrecision) {
  return finite_spectrum(m, BoundaryCondition::Neumann, precision);
}

}  // namespace sgspec
