#pragma once

// Lacunary sequences, dyadic block combinatorics, Bonami sumsets and
// product spectra.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "pzbench/torus.hpp"

namespace pzbench::spectra {

using torus::Frequency;

/// Strictly increasing positive integers with inf lambda_{k+1}/lambda_k > 1.
/// Sequences with fewer than two terms have ratio +infinity.
class LacunarySeq {
 public:
  LacunarySeq() = default;
  /// Throws NotLacunary naming the first offending index.
  explicit LacunarySeq(std::vector<std::int64_t> terms);

  std::span<const std::int64_t> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  std::int64_t operator[](std::size_t i) const { return terms_[i]; }
  double ratio() const noexcept { return ratio_; }

 private:
  std::vector<std::int64_t> terms_;
  double ratio_ = torus::kInfinity;
};

/// Two ways of cutting the integers into dyadic pieces.
///   signed_dyadic: +-[2^k, 2^{k+1}), k >= 0 (covers Z \ {0})
///   shifted:       [2^k - 1, 2^{k+1} - 2], k >= 0 (covers N_0)
enum class BlockScheme { signed_dyadic, shifted };

/// Index of the block containing n. Throws for n outside the scheme's
/// ambient set (0 for signed_dyadic, negatives for shifted).
int block_index(BlockScheme scheme, std::int64_t n);

/// Inclusive [first, last] of the non-negative part of block k.
std::pair<std::int64_t, std::int64_t> block_bounds(BlockScheme scheme, int k);

/// Finite duplicate-free set of frequencies of a fixed arity.
class FrequencySet {
 public:
  explicit FrequencySet(std::size_t dim = 1) : dim_(dim) {}
  static FrequencySet from_1d(std::span<const std::int64_t> values);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  bool contains(const Frequency& f) const { return elements_.contains(f); }
  bool contains(std::int64_t n) const { return contains(Frequency(n)); }
  void insert(const Frequency& f);
  void insert(std::int64_t n) { insert(Frequency(n)); }

  std::set<Frequency>::const_iterator begin() const { return elements_.begin(); }
  std::set<Frequency>::const_iterator end() const { return elements_.end(); }

  /// Sorted values of a 1D set.
  std::vector<std::int64_t> values_1d() const;

  friend bool operator==(const FrequencySet&, const FrequencySet&) = default;

 private:
  std::size_t dim_;
  std::set<Frequency> elements_;
};

/// terms start * ratio^k for k = 0..count-1.
LacunarySeq geometric_lacunary(std::int64_t ratio, std::size_t count,
                               std::int64_t start = 1);

struct BlockCounts {
  std::vector<std::size_t> counts;  // counts[k] = #(+-[2^k, 2^{k+1}) cap set)
  std::size_t sup = 0;
};

BlockCounts block_counts(const FrequencySet& set, int max_block);

struct BonamiSumset {
  FrequencySet elements;
  std::size_t order = 0;       // k
  std::size_t terms_used = 0;  // T, the number of leading base terms
};

/// {+-lambda_{n_1} +- ... +- lambda_{n_k} : n_1 > ... > n_k} over the largest
/// prefix of the base whose sumset still fits in `cap`.
BonamiSumset sumset_bonami(const LacunarySeq& base, std::size_t order,
                           std::size_t cap);

inline constexpr std::size_t kDefaultProductCap = std::size_t{1} << 22;

FrequencySet product_set(std::span<const FrequencySet> factors,
                         std::size_t cap = kDefaultProductCap);

struct LacunarityVerdict {
  bool holds = false;
  double inf_ratio = torus::kInfinity;
  /// First adjacent pair (terms[i], terms[i+1]) violating the window.
  std::optional<std::pair<std::int64_t, std::int64_t>> witness;
  std::size_t witness_index = 0;
};

/// Verdict on lo <= inf ratio <= hi. A single term passes. Throws
/// PreconditionError when the input is empty, non-positive or not
/// strictly increasing.
LacunarityVerdict is_lacunary_with_ratio_in(std::span<const std::int64_t> seq,
                                            double lo, double hi);

}  // namespace pzbench::spectra
