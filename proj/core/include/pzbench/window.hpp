#pragma once

namespace pzbench {

/// The Littlewood-Paley window: even, supported in +-[1,3], identically 1
/// on [3/2, 2], affine on [1, 3/2] and on [2, 3].
double dyadic_window(double xi) noexcept;

/// eta(2^-k xi).
double dyadic_window(int k, double xi) noexcept;

/// sum_{k = k_lo}^{k_hi} eta(2^-k xi).
double dyadic_window_partition(double xi, int k_lo, int k_hi) noexcept;

}  // namespace pzbench
