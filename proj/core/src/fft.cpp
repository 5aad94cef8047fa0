#include "fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>
#include <vector>

namespace pzbench::detail {
namespace {

// The FFTW planner is not reentrant; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

void fft_inplace(std::span<std::complex<double>> data,
                 std::span<const std::size_t> sizes, FftSign sign) {
  std::vector<int> n(sizes.begin(), sizes.end());
  std::size_t total = 1;
  for (std::size_t s : sizes) total *= s;
  if (total != data.size()) {
    throw std::logic_error("fft_inplace: size mismatch");
  }
  auto* buf = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft(static_cast<int>(n.size()), n.data(), buf, buf,
                         sign == FftSign::forward ? FFTW_FORWARD : FFTW_BACKWARD,
                         FFTW_ESTIMATE);
  }
  if (plan == nullptr) throw std::runtime_error("fftw planning failed");
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

}  // namespace pzbench::detail
