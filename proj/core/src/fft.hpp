#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace pzbench::detail {

enum class FftSign { forward = -1, backward = +1 };

/// Unnormalized in-place multi-dimensional DFT:
///   out[k] = sum_j in[j] exp(sign * 2 pi i k.j / M).
/// Row-major layout, last axis fastest.
void fft_inplace(std::span<std::complex<double>> data,
                 std::span<const std::size_t> sizes, FftSign sign);

}  // namespace pzbench::detail
