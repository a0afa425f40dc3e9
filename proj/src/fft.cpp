// Copyright 2026 The revmix Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "revmix/fft.hpp"

#include <cmath>
#include <numbers>

#include "revmix/errors.hpp"

namespace revmix::fft {
namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 Cooley-Tukey. n must be a power of two.
void fft_pow2(std::vector<cd>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * kPi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    const cd wstep(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cd w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        cd u = a[i + k];
        cd v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wstep;
      }
    }
  }
  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv;
  }
}

// Bluestein chirp-z for arbitrary n, built on a power-of-two convolution.
void fft_bluestein(std::vector<cd>& a, bool inverse) {
  const std::size_t n = a.size();
  const double sign = inverse ? 1.0 : -1.0;
  std::vector<cd> chirp(n);
  for (std::size_t k = 0; k < n; ++k) {
    // k^2 mod 2n keeps the argument small for long transforms.
    const std::size_t k2 = static_cast<std::size_t>(
        (static_cast<unsigned long long>(k) * k) % (2 * n));
    const double ang = sign * kPi * static_cast<double>(k2) / static_cast<double>(n);
    chirp[k] = cd(std::cos(ang), std::sin(ang));
  }
  const std::size_t m = next_pow2(2 * n - 1);
  std::vector<cd> u(m, cd(0.0, 0.0)), v(m, cd(0.0, 0.0));
  for (std::size_t k = 0; k < n; ++k) u[k] = a[k] * chirp[k];
  v[0] = std::conj(chirp[0]);
  for (std::size_t k = 1; k < n; ++k) v[k] = v[m - k] = std::conj(chirp[k]);
  fft_pow2(u, false);
  fft_pow2(v, false);
  for (std::size_t k = 0; k < m; ++k) u[k] *= v[k];
  fft_pow2(u, true);
  for (std::size_t k = 0; k < n; ++k) a[k] = u[k] * chirp[k];
  if (inverse) {
    const double invn = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= invn;
  }
}

}  // namespace

void transform(std::vector<cd>& data, bool inverse) {
  if (data.size() <= 1) return;
  if (is_pow2(data.size())) {
    fft_pow2(data, inverse);
  } else {
    fft_bluestein(data, inverse);
  }
}

std::vector<cd> rfft(std::span<const double> x, std::size_t n) {
  if (n == 0) throw InvalidArgument("rfft: zero length");
  std::vector<cd> a(n, cd(0.0, 0.0));
  const std::size_t copy = x.size() < n ? x.size() : n;
  for (std::size_t i = 0; i < copy; ++i) a[i] = cd(x[i], 0.0);
  transform(a, false);
  a.resize(n / 2 + 1);
  return a;
}

std::vector<double> irfft(std::span<const std::complex<double>> spectrum, std::size_t n) {
  if (n == 0) throw InvalidArgument("irfft: zero length");
  if (spectrum.size() != n / 2 + 1) {
    throw InvalidArgument("irfft: spectrum size does not match target length");
  }
  std::vector<cd> a(n);
  for (std::size_t k = 0; k < spectrum.size(); ++k) a[k] = spectrum[k];
  for (std::size_t k = spectrum.size(); k < n; ++k) a[k] = std::conj(a[n - k]);
  transform(a, true);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i].real();
  return out;
}

}  // namespace revmix::fft
