#include "pzbench/torus.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "fft.hpp"
#include "pzbench/window.hpp"
#include "sum.hpp"

namespace pzbench::torus {
namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// |v| without hypot's overflow guard; grid values here are far from overflow.
double modulus(const Complex& v) { return std::sqrt(std::norm(v)); }

std::size_t wrap(std::int64_t n, std::size_t m) {
  const auto mm = static_cast<std::int64_t>(m);
  std::int64_t r = n % mm;
  if (r < 0) r += mm;
  return static_cast<std::size_t>(r);
}

}  // namespace

Frequency::Frequency(std::initializer_list<std::int64_t> coords)
    : Frequency(std::span<const std::int64_t>(coords.begin(), coords.size())) {}

Frequency::Frequency(std::span<const std::int64_t> coords) {
  if (coords.empty() || coords.size() > kMaxDim) {
    throw PreconditionError("frequency arity must be in [1, " +
                            std::to_string(kMaxDim) + "]");
  }
  dim_ = static_cast<std::uint8_t>(coords.size());
  std::copy(coords.begin(), coords.end(), idx_.begin());
}

TrigPoly::TrigPoly(std::size_t dim) : dim_(dim) {
  if (dim == 0 || dim > kMaxDim) {
    throw PreconditionError("polynomial dimension must be in [1, " +
                            std::to_string(kMaxDim) + "]");
  }
}

void TrigPoly::check_dim(const Frequency& n) const {
  if (n.dim() != dim_) {
    throw PreconditionError("frequency arity " + std::to_string(n.dim()) +
                            " does not match polynomial dimension " +
                            std::to_string(dim_));
  }
}

void TrigPoly::set(const Frequency& n, Complex value) {
  check_dim(n);
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw PreconditionError("non-finite coefficient");
  }
  if (value == Complex{}) {
    coeffs_.erase(n);
  } else {
    coeffs_[n] = value;
  }
}

void TrigPoly::add(const Frequency& n, Complex value) {
  set(n, (*this)[n] + value);
}

Complex TrigPoly::operator[](const Frequency& n) const {
  check_dim(n);
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? Complex{} : it->second;
}

std::int64_t TrigPoly::degree(std::size_t axis) const {
  std::int64_t d = 0;
  for (const auto& [n, c] : coeffs_) d = std::max(d, std::abs(n[axis]));
  return d;
}

std::int64_t TrigPoly::degree() const {
  std::int64_t d = 0;
  for (std::size_t a = 0; a < dim_; ++a) d = std::max(d, degree(a));
  return d;
}

std::int64_t TrigPoly::min_index(std::size_t axis) const {
  if (coeffs_.empty()) return 0;
  std::int64_t v = coeffs_.begin()->first[axis];
  for (const auto& [n, c] : coeffs_) v = std::min(v, n[axis]);
  return v;
}

std::int64_t TrigPoly::max_index(std::size_t axis) const {
  if (coeffs_.empty()) return 0;
  std::int64_t v = coeffs_.begin()->first[axis];
  for (const auto& [n, c] : coeffs_) v = std::max(v, n[axis]);
  return v;
}

double TrigPoly::coefficient_l2() const {
  detail::CompensatedSum s;
  for (const auto& [n, c] : coeffs_) s.add(std::norm(c));
  return std::sqrt(s.value());
}

double TrigPoly::coefficient_l1() const {
  detail::CompensatedSum s;
  for (const auto& [n, c] : coeffs_) s.add(std::abs(c));
  return s.value();
}

TrigPoly& TrigPoly::operator*=(Complex scale) {
  if (scale == Complex{}) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [n, c] : coeffs_) c *= scale;
  return *this;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& other) {
  if (other.dim_ != dim_) throw PreconditionError("dimension mismatch");
  for (const auto& [n, c] : other.coeffs_) add(n, c);
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& other) {
  if (other.dim_ != dim_) throw PreconditionError("dimension mismatch");
  for (const auto& [n, c] : other.coeffs_) add(n, -c);
  return *this;
}

GridSignal::GridSignal(std::vector<std::size_t> sizes,
                       std::vector<Complex> values)
    : sizes_(std::move(sizes)), values_(std::move(values)) {
  if (sizes_.empty() || sizes_.size() > kMaxDim) {
    throw PreconditionError("grid dimension must be in [1, " +
                            std::to_string(kMaxDim) + "]");
  }
  std::size_t total = 1;
  for (std::size_t m : sizes_) {
    if (m < 2 || !is_pow2(m)) {
      throw PreconditionError("grid sizes must be powers of two >= 2, got " +
                              std::to_string(m));
    }
    total *= m;
  }
  if (total != values_.size()) {
    throw PreconditionError("grid has " + std::to_string(values_.size()) +
                            " values, expected " + std::to_string(total));
  }
  for (const Complex& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw PreconditionError("grid values must be finite");
    }
  }
}

OrliczExponent::OrliczExponent(double r) : r_(r) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw PreconditionError("Orlicz exponent must be a finite r >= 0");
  }
}

std::size_t next_pow2_above(std::size_t bound) {
  std::size_t m = 1;
  while (m <= bound) m <<= 1;
  return m;
}

std::size_t minimum_grid_size(std::int64_t degree) {
  return std::max<std::size_t>(
      2, next_pow2_above(2 * static_cast<std::size_t>(std::abs(degree))));
}

std::vector<std::size_t> minimum_grid(const TrigPoly& p, std::size_t floor) {
  std::vector<std::size_t> sizes(p.dim());
  for (std::size_t a = 0; a < p.dim(); ++a) {
    sizes[a] = std::max(minimum_grid_size(p.degree(a)),
                        next_pow2_above(floor > 0 ? floor - 1 : 0));
  }
  return sizes;
}

GridSignal synthesize(const TrigPoly& p, std::span<const std::size_t> sizes) {
  if (sizes.size() != p.dim()) {
    throw PreconditionError("grid arity does not match polynomial dimension");
  }
  std::size_t total = 1;
  for (std::size_t a = 0; a < sizes.size(); ++a) {
    const std::size_t required = minimum_grid_size(p.degree(a));
    if (sizes[a] < required || !is_pow2(sizes[a])) {
      throw GridTooSmall(a, sizes[a], required);
    }
    total *= sizes[a];
  }
  std::vector<Complex> buf(total);
  for (const auto& [n, c] : p) {
    std::size_t lin = 0;
    for (std::size_t a = 0; a < sizes.size(); ++a) {
      lin = lin * sizes[a] + wrap(n[a], sizes[a]);
    }
    buf[lin] += c;
  }
  detail::fft_inplace(buf, sizes, detail::FftSign::backward);
  return GridSignal(std::vector<std::size_t>(sizes.begin(), sizes.end()),
                    std::move(buf));
}

GridSignal synthesize(const TrigPoly& p, std::size_t size_per_axis) {
  std::vector<std::size_t> sizes(p.dim(), size_per_axis);
  return synthesize(p, sizes);
}

TrigPoly analyze(const GridSignal& s, double relative_cutoff) {
  std::vector<Complex> buf(s.values().begin(), s.values().end());
  detail::fft_inplace(buf, s.sizes(), detail::FftSign::forward);
  const double scale = 1.0 / static_cast<double>(buf.size());
  double peak = 0.0;
  for (Complex& c : buf) {
    c *= scale;
    peak = std::max(peak, std::abs(c));
  }
  const double cutoff = relative_cutoff * peak;

  TrigPoly out(s.dim());
  std::array<std::int64_t, kMaxDim> idx{};
  const auto sizes = s.sizes();
  for (std::size_t lin = 0; lin < buf.size(); ++lin) {
    if (buf[lin] == Complex{} || std::abs(buf[lin]) <= cutoff) continue;
    std::size_t rem = lin;
    bool nyquist = false;
    for (std::size_t a = sizes.size(); a-- > 0;) {
      const std::size_t m = sizes[a];
      const std::size_t j = rem % m;
      rem /= m;
      if (2 * j == m) nyquist = true;
      idx[a] = 2 * j < m ? static_cast<std::int64_t>(j)
                         : static_cast<std::int64_t>(j) -
                               static_cast<std::int64_t>(m);
    }
    if (nyquist) continue;
    out.set(Frequency(std::span<const std::int64_t>(idx.data(), sizes.size())),
            buf[lin]);
  }
  return out;
}

double lp_norm(const GridSignal& s, double p) {
  if (!(p >= 1.0)) throw PreconditionError("lp_norm requires p >= 1");
  double peak = 0.0;
  for (const Complex& v : s.values()) peak = std::max(peak, modulus(v));
  if (p == kInfinity || peak == 0.0) return peak;
  detail::CompensatedSum acc;
  for (const Complex& v : s.values()) acc.add(std::pow(modulus(v) / peak, p));
  return peak *
         std::pow(acc.value() / static_cast<double>(s.size()), 1.0 / p);
}

double orlicz_functional(const GridSignal& s, OrliczExponent r) {
  const double e = r.value();
  auto weight = [e](double a) {
    const double l = std::log1p(a);
    if (e == 0.5) return std::sqrt(l);
    if (e == 1.0) return l;
    return e == 0.0 ? 1.0 : std::pow(l, e);
  };
  detail::CompensatedSum acc;
  for (const Complex& v : s.values()) {
    const double a = modulus(v);
    if (a == 0.0) continue;
    acc.add(a * weight(a));
  }
  return acc.value() / static_cast<double>(s.size());
}

std::vector<int> periodic_blocks(const TrigPoly& p) {
  if (p.dim() != 1) {
    throw PreconditionError("periodic square function requires a 1D polynomial");
  }
  std::set<int> ks;
  for (const auto& [n, c] : p) {
    const std::int64_t a = std::abs(n[0]);
    if (a == 0) continue;
    // eta(2^-k a) != 0 iff 2^k < a < 3 * 2^k.
    const int top = static_cast<int>(std::floor(std::log2(static_cast<double>(a))));
    for (int k = top - 2; k <= top + 1; ++k) {
      if (dyadic_window(k, static_cast<double>(a)) != 0.0) ks.insert(k);
    }
  }
  return {ks.begin(), ks.end()};
}

double periodic_square_function_norm(const TrigPoly& p, std::size_t grid) {
  const auto blocks = periodic_blocks(p);
  if (blocks.empty()) return 0.0;
  const std::int64_t deg = p.degree();
  if (grid == 0) grid = next_pow2_above(8 * static_cast<std::size_t>(deg));
  const std::size_t sizes[] = {grid};
  std::vector<double> energy(grid, 0.0);
  for (int k : blocks) {
    TrigPoly block(1);
    for (const auto& [n, c] : p) {
      const double w = dyadic_window(k, static_cast<double>(n[0]));
      if (w != 0.0) block.set(n, w * c);
    }
    const GridSignal s = synthesize(block, sizes);
    for (std::size_t j = 0; j < grid; ++j) energy[j] += std::norm(s[j]);
  }
  detail::CompensatedSum acc;
  for (double e : energy) acc.add(std::sqrt(e));
  return acc.value() / static_cast<double>(grid);
}

}  // namespace pzbench::torus
