#include "pzbench/spectra.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <string>

namespace pzbench::spectra {
namespace {

int floor_log2(std::uint64_t v) { return 63 - std::countl_zero(v); }

void signed_sums(std::span<const std::int64_t> base, std::size_t order,
                 std::size_t below, std::int64_t acc,
                 std::set<Frequency>& out) {
  if (order == 0) {
    out.insert(Frequency(acc));
    return;
  }
  // Indices strictly decreasing: pick the next index among [order-1, below).
  for (std::size_t i = order - 1; i < below; ++i) {
    signed_sums(base, order - 1, i, acc + base[i], out);
    signed_sums(base, order - 1, i, acc - base[i], out);
  }
}

std::set<Frequency> sumset_prefix(std::span<const std::int64_t> base,
                                  std::size_t order, std::size_t terms) {
  std::set<Frequency> out;
  signed_sums(base, order, terms, 0, out);
  return out;
}

}  // namespace

LacunarySeq::LacunarySeq(std::vector<std::int64_t> terms)
    : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i] < 1) throw NotLacunary(i, "terms must be >= 1");
    if (i > 0 && terms_[i] <= terms_[i - 1]) {
      throw NotLacunary(i, "terms must be strictly increasing");
    }
  }
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    ratio_ = std::min(ratio_, static_cast<double>(terms_[i]) /
                                  static_cast<double>(terms_[i - 1]));
  }
  // Strictly increasing integers always have every ratio > 1.
}

int block_index(BlockScheme scheme, std::int64_t n) {
  switch (scheme) {
    case BlockScheme::signed_dyadic:
      if (n == 0) throw PreconditionError("0 lies in no signed dyadic block");
      return floor_log2(static_cast<std::uint64_t>(std::abs(n)));
    case BlockScheme::shifted:
      if (n < 0) throw PreconditionError("shifted blocks cover N_0 only");
      return floor_log2(static_cast<std::uint64_t>(n) + 1);
  }
  return 0;
}

std::pair<std::int64_t, std::int64_t> block_bounds(BlockScheme scheme, int k) {
  if (k < 0 || k > 61) throw PreconditionError("block index out of range");
  const std::int64_t lo = std::int64_t{1} << k;
  switch (scheme) {
    case BlockScheme::signed_dyadic:
      return {lo, 2 * lo - 1};
    case BlockScheme::shifted:
      return {lo - 1, 2 * lo - 2};
  }
  return {0, 0};
}

FrequencySet FrequencySet::from_1d(std::span<const std::int64_t> values) {
  FrequencySet s(1);
  for (std::int64_t v : values) s.insert(v);
  return s;
}

void FrequencySet::insert(const Frequency& f) {
  if (f.dim() != dim_) {
    throw PreconditionError("frequency arity does not match set dimension");
  }
  elements_.insert(f);
}

std::vector<std::int64_t> FrequencySet::values_1d() const {
  if (dim_ != 1) throw PreconditionError("values_1d on a multi-dimensional set");
  std::vector<std::int64_t> out;
  out.reserve(elements_.size());
  for (const Frequency& f : elements_) out.push_back(f[0]);
  return out;
}

LacunarySeq geometric_lacunary(std::int64_t ratio, std::size_t count,
                               std::int64_t start) {
  if (ratio < 2) throw PreconditionError("geometric ratio must be >= 2");
  if (count < 1) throw PreconditionError("count must be >= 1");
  if (start < 1) throw PreconditionError("start must be >= 1");
  std::vector<std::int64_t> terms;
  terms.reserve(count);
  std::int64_t t = start;
  for (std::size_t i = 0; i < count; ++i) {
    terms.push_back(t);
    if (i + 1 < count) {
      if (t > std::numeric_limits<std::int64_t>::max() / ratio) {
        throw PreconditionError("geometric sequence overflows int64 at term " +
                                std::to_string(i + 1));
      }
      t *= ratio;
    }
  }
  return LacunarySeq(std::move(terms));
}

BlockCounts block_counts(const FrequencySet& set, int max_block) {
  if (set.dim() != 1) throw PreconditionError("block_counts needs a 1D set");
  if (max_block < 0) throw PreconditionError("max_block must be >= 0");
  BlockCounts out;
  out.counts.assign(static_cast<std::size_t>(max_block) + 1, 0);
  for (const Frequency& f : set) {
    if (f[0] == 0) continue;
    const int k = block_index(BlockScheme::signed_dyadic, f[0]);
    if (k <= max_block) ++out.counts[static_cast<std::size_t>(k)];
  }
  for (std::size_t c : out.counts) out.sup = std::max(out.sup, c);
  return out;
}

BonamiSumset sumset_bonami(const LacunarySeq& base, std::size_t order,
                           std::size_t cap) {
  if (order < 1) throw PreconditionError("sumset order must be >= 1");
  if (base.size() < order) {
    throw PreconditionError("sumset order exceeds the number of base terms");
  }
  std::set<Frequency> best = sumset_prefix(base.terms(), order, order);
  if (best.size() > cap) throw CapExceeded(cap, best.size());
  std::size_t used = order;
  for (std::size_t t = order + 1; t <= base.size(); ++t) {
    auto next = sumset_prefix(base.terms(), order, t);
    if (next.size() > cap) break;
    best = std::move(next);
    used = t;
  }
  BonamiSumset out;
  out.order = order;
  out.terms_used = used;
  for (const Frequency& f : best) out.elements.insert(f);
  return out;
}

FrequencySet product_set(std::span<const FrequencySet> factors,
                         std::size_t cap) {
  if (factors.empty() || factors.size() > torus::kMaxDim) {
    throw PreconditionError("product_set needs 1.." +
                            std::to_string(torus::kMaxDim) + " factors");
  }
  std::size_t total = 1;
  for (const FrequencySet& f : factors) {
    if (f.dim() != 1) throw PreconditionError("product_set factors must be 1D");
    if (f.size() != 0 && total > cap / f.size() + 1) {
      throw CapExceeded(cap, std::numeric_limits<std::size_t>::max());
    }
    total *= f.size();
  }
  if (total > cap) throw CapExceeded(cap, total);

  FrequencySet out(factors.size());
  if (total == 0) return out;
  std::vector<std::vector<std::int64_t>> axes;
  for (const FrequencySet& f : factors) axes.push_back(f.values_1d());
  std::vector<std::size_t> pos(axes.size(), 0);
  std::vector<std::int64_t> coord(axes.size());
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t a = 0; a < axes.size(); ++a) coord[a] = axes[a][pos[a]];
    out.insert(Frequency(std::span<const std::int64_t>(coord)));
    for (std::size_t a = axes.size(); a-- > 0;) {
      if (++pos[a] < axes[a].size()) break;
      pos[a] = 0;
    }
  }
  return out;
}

LacunarityVerdict is_lacunary_with_ratio_in(std::span<const std::int64_t> seq,
                                            double lo, double hi) {
  if (seq.empty()) throw PreconditionError("empty sequence");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 1) throw PreconditionError("sequence must be positive");
    if (i > 0 && seq[i] <= seq[i - 1]) {
      throw PreconditionError("sequence must be strictly increasing (index " +
                              std::to_string(i) + ")");
    }
  }
  LacunarityVerdict v;
  if (seq.size() == 1) {
    v.holds = true;
    return v;
  }
  std::optional<std::size_t> first_low;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const double r =
        static_cast<double>(seq[i + 1]) / static_cast<double>(seq[i]);
    v.inf_ratio = std::min(v.inf_ratio, r);
    if (!first_low && r < lo) first_low = i;
  }
  if (first_low) {
    v.holds = false;
    v.witness_index = *first_low;
  } else if (v.inf_ratio > hi) {
    // Every pair exceeds hi; the first one is the witness.
    v.holds = false;
    v.witness_index = 0;
  } else {
    v.holds = true;
    return v;
  }
  v.witness = std::pair{seq[v.witness_index], seq[v.witness_index + 1]};
  return v;
}

}  // namespace pzbench::spectra
