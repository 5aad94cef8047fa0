#pragma once

// Trigonometric polynomials on T^n, their grid samples, and the norms and
// Orlicz-type functionals evaluated on those samples.

#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include "pzbench/errors.hpp"

namespace pzbench {

using Complex = std::complex<double>;

namespace torus {

inline constexpr std::size_t kMaxDim = 4;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Integer frequency in Z^d, d <= kMaxDim.
class Frequency {
 public:
  Frequency() = default;
  explicit Frequency(std::int64_t n) : dim_(1) { idx_[0] = n; }
  Frequency(std::initializer_list<std::int64_t> coords);
  explicit Frequency(std::span<const std::int64_t> coords);

  std::size_t dim() const noexcept { return dim_; }
  std::int64_t operator[](std::size_t axis) const { return idx_[axis]; }
  std::span<const std::int64_t> coords() const noexcept {
    return {idx_.data(), dim_};
  }

  friend auto operator<=>(const Frequency&, const Frequency&) = default;

 private:
  std::uint8_t dim_ = 0;
  std::array<std::int64_t, kMaxDim> idx_{};
};

/// Finitely supported coefficient table f^(n) over Z^dim.
///
/// Exact zeros are never stored, so size() is the support cardinality.
class TrigPoly {
 public:
  using Map = std::map<Frequency, Complex>;

  explicit TrigPoly(std::size_t dim = 1);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool empty() const noexcept { return coeffs_.empty(); }

  /// Sets f^(n); a zero value erases the entry.
  void set(const Frequency& n, Complex value);
  void set(std::int64_t n, Complex value) { set(Frequency(n), value); }
  void add(const Frequency& n, Complex value);
  void add(std::int64_t n, Complex value) { add(Frequency(n), value); }

  Complex operator[](const Frequency& n) const;
  Complex operator[](std::int64_t n) const { return (*this)[Frequency(n)]; }

  /// Largest |n_axis| over the support (0 for the zero polynomial).
  std::int64_t degree(std::size_t axis) const;
  std::int64_t degree() const;

  /// Smallest and largest n_axis over the support.
  std::int64_t min_index(std::size_t axis) const;
  std::int64_t max_index(std::size_t axis) const;

  const Map& coefficients() const noexcept { return coeffs_; }
  Map::const_iterator begin() const noexcept { return coeffs_.begin(); }
  Map::const_iterator end() const noexcept { return coeffs_.end(); }

  /// (sum |f^(n)|^2)^{1/2}
  double coefficient_l2() const;
  /// sum |f^(n)|
  double coefficient_l1() const;

  TrigPoly& operator*=(Complex scale);
  TrigPoly& operator+=(const TrigPoly& other);
  TrigPoly& operator-=(const TrigPoly& other);
  friend TrigPoly operator*(Complex scale, TrigPoly p) { return p *= scale; }
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

 private:
  void check_dim(const Frequency& n) const;

  std::size_t dim_;
  Map coeffs_;
};

/// Complex samples on the uniform grid theta_j = j / M of T^dim.
/// Row-major layout: the last axis varies fastest.
class GridSignal {
 public:
  GridSignal(std::vector<std::size_t> sizes, std::vector<Complex> values);

  std::size_t dim() const noexcept { return sizes_.size(); }
  std::span<const std::size_t> sizes() const noexcept { return sizes_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Complex> values() const noexcept { return values_; }
  Complex operator[](std::size_t linear) const { return values_[linear]; }

 private:
  std::vector<std::size_t> sizes_;
  std::vector<Complex> values_;
};

/// Exponent r >= 0 of the Orlicz class L log^r L.
class OrliczExponent {
 public:
  explicit OrliczExponent(double r);
  double value() const noexcept { return r_; }

 private:
  double r_;
};

/// Smallest power of two strictly greater than `bound`.
std::size_t next_pow2_above(std::size_t bound);

/// Smallest power-of-two axis size that synthesize() accepts for a degree.
std::size_t minimum_grid_size(std::int64_t degree);

/// Per-axis minimum sizes for p, each also >= `floor`.
std::vector<std::size_t> minimum_grid(const TrigPoly& p, std::size_t floor = 2);

/// values[j] = sum_n f^(n) exp(2 pi i n . theta_j).
/// Throws GridTooSmall unless every axis satisfies M_i > 2 degree_i.
GridSignal synthesize(const TrigPoly& p, std::span<const std::size_t> sizes);
GridSignal synthesize(const TrigPoly& p, std::size_t size_per_axis);

/// Inverse of synthesize on band-limited input; keeps |n_i| < M_i / 2.
/// Coefficients with modulus <= relative_cutoff * max modulus are dropped.
TrigPoly analyze(const GridSignal& s, double relative_cutoff = 0.0);

/// Rectangle-rule L^p norm; p = kInfinity gives the grid maximum.
double lp_norm(const GridSignal& s, double p);

/// (1 / #grid) sum |v| log^r(1 + |v|), natural logarithm.
double orlicz_functional(const GridSignal& s, OrliczExponent r);

template <class W>
concept WeightFunction = requires(const W& w, std::int64_t n) {
  { w(n) } -> std::convertible_to<Complex>;
};

/// (sum_n |m(n) f^(n)|^2)^{1/2} over the support of a 1D polynomial.
template <WeightFunction W>
double weighted_l2(const TrigPoly& p, const W& m) {
  if (p.dim() != 1) {
    throw PreconditionError("weighted_l2 requires a 1D polynomial");
  }
  double acc = 0.0;
  for (const auto& [n, c] : p) {
    acc += std::norm(Complex(m(n[0])) * c);
  }
  return std::sqrt(acc);
}

/// || (sum_k |Delta_k f|^2)^{1/2} ||_{L^1(T)} with Delta_k the
/// eta(2^-k n) frequency blocks; f^(0) is never seen by any block.
/// `grid` = 0 picks 8x oversampling of the degree.
double periodic_square_function_norm(const TrigPoly& p, std::size_t grid = 0);

/// Block indices k with eta(2^-k n) != 0 for some n in the support.
std::vector<int> periodic_blocks(const TrigPoly& p);

}  // namespace torus
}  // namespace pzbench
