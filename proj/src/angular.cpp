// Copyright 2026 The spinqd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spinqd/angular.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "spinqd/error.hpp"

namespace spinqd {
namespace {

constexpr int kMaxFactorial = 170;

const std::array<long double, kMaxFactorial + 1>& factorial_table() {
  static const auto table = [] {
    std::array<long double, kMaxFactorial + 1> t{};
    t[0] = 1.0L;
    for (int n = 1; n <= kMaxFactorial; ++n) t[n] = t[n - 1] * n;
    return t;
  }();
  return table;
}

bool triangle(HalfInt a, HalfInt b, HalfInt c) {
  int s = a.twice() + b.twice() + c.twice();
  if (s % 2 != 0) return false;
  return c.twice() <= a.twice() + b.twice() && c.twice() >= std::abs(a.twice() - b.twice());
}

int half(int twice) { return twice / 2; }

int parity_sign(int n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace

HalfInt HalfInt::from_double(double value) {
  double t = std::round(2.0 * value);
  if (std::abs(2.0 * value - t) > 1e-9) throw DomainError("not a half-integer: " + std::to_string(value));
  return from_twice(static_cast<int>(t));
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(as_int());
  return std::to_string(twice_) + "/2";
}

long double factorial(int n) {
  if (n < 0 || n > kMaxFactorial) throw DomainError("factorial argument out of range");
  return factorial_table()[n];
}

double wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
  if (!admissible(j1, m1) || !admissible(j2, m2) || !admissible(j3, m3))
    throw DomainError("inadmissible projection in 3j symbol");
  if ((m1 + m2 + m3).twice() != 0) return 0.0;
  if (!triangle(j1, j2, j3)) return 0.0;

  const int a = half((j1 + j2 - j3).twice());
  const int b = half((j1 - m1).twice());
  const int c = half((j2 + m2).twice());
  const int d = half((j3 - j2 + m1).twice());
  const int e = half((j3 - j1 - m2).twice());

  long double delta = factorial(half((j1 + j2 - j3).twice())) * factorial(half((j1 - j2 + j3).twice())) *
                      factorial(half((-j1 + j2 + j3).twice())) /
                      factorial(half((j1 + j2 + j3).twice()) + 1);
  long double pre = factorial(half((j1 + m1).twice())) * factorial(half((j1 - m1).twice())) *
                    factorial(half((j2 + m2).twice())) * factorial(half((j2 - m2).twice())) *
                    factorial(half((j3 + m3).twice())) * factorial(half((j3 - m3).twice()));

  int kmin = std::max({0, -d, -e});
  int kmax = std::min({a, b, c});
  long double sum = 0.0L;
  for (int k = kmin; k <= kmax; ++k) {
    long double den = factorial(k) * factorial(a - k) * factorial(b - k) * factorial(c - k) *
                      factorial(d + k) * factorial(e + k);
    sum += parity_sign(k) / den;
  }
  int phase = parity_sign(half((j1 - j2 - m3).twice()));
  return static_cast<double>(phase * std::sqrt(delta * pre) * sum);
}

double clebsch_gordan(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m) {
  int phase = parity_sign(half((j1 - j2 + m).twice()));
  return phase * std::sqrt(j.twice() + 1.0) * wigner_3j(j1, j2, j, m1, m2, -m);
}

std::complex<double> spherical_harmonic(int K, int Q, SphericalPoint p) {
  if (K < 0 || std::abs(Q) > K) throw DomainError("invalid spherical harmonic index");
  int aq = std::abs(Q);
  double y = std::sph_legendre(static_cast<unsigned>(K), static_cast<unsigned>(aq), p.theta);
  std::complex<double> v = std::polar(y, aq * p.phi);
  if (Q < 0) v = static_cast<double>(parity_sign(aq)) * std::conj(v);
  return v;
}

SphLegendre::SphLegendre(int kmax) : kmax_(kmax) {
  if (kmax < 0) throw DomainError("negative degree");
  const std::size_t n = static_cast<std::size_t>((kmax + 1) * (kmax + 2) / 2);
  diag_.assign(static_cast<std::size_t>(kmax + 1), 0.0);
  a_.assign(n, 0.0);
  b_.assign(n, 0.0);
  for (int M = 1; M <= kmax; ++M) diag_[M] = -std::sqrt((2.0 * M + 1.0) / (2.0 * M));
  for (int M = 0; M <= kmax; ++M)
    for (int K = M + 2; K <= kmax; ++K) {
      const std::size_t i = static_cast<std::size_t>(K * (K + 1) / 2 + M);
      a_[i] = std::sqrt((4.0 * K * K - 1.0) / (static_cast<double>(K * K) - M * M));
      b_[i] = std::sqrt((static_cast<double>((K - 1) * (K - 1)) - M * M) / (4.0 * (K - 1) * (K - 1) - 1.0));
    }
}

void SphLegendre::operator()(double theta, std::vector<double>& out) const {
  out.resize(a_.size());
  const double x = std::cos(theta), s = std::sin(theta);
  double ymm = 0.5 / std::sqrt(std::numbers::pi);
  for (int M = 0; M <= kmax_; ++M) {
    if (M > 0) ymm *= diag_[M] * s;
    const int mm = M * (M + 1) / 2 + M;
    out[mm] = ymm;
    if (M + 1 <= kmax_) out[mm + M + 1] = std::sqrt(2.0 * M + 3.0) * x * ymm;
    for (int K = M + 2; K <= kmax_; ++K) {
      const int i = K * (K + 1) / 2 + M;
      out[i] = a_[i] * (x * out[i - K] - b_[i] * out[i - K - (K - 1)]);
    }
  }
}

void sph_legendre_table(int kmax, double theta, std::vector<double>& out) { SphLegendre{kmax}(theta, out); }

double wigner_small_d(HalfInt j, HalfInt mp, HalfInt m, double beta) {
  if (!admissible(j, mp) || !admissible(j, m)) throw DomainError("inadmissible projection in d-matrix");
  const int jpmp = half((j + mp).twice());
  const int jmmp = half((j - mp).twice());
  const int jpm = half((j + m).twice());
  const int jmm = half((j - m).twice());
  const int mpm = half((mp - m).twice());
  const double c = std::cos(0.5 * beta);
  const double s = std::sin(0.5 * beta);
  const long double norm = std::sqrt(factorial(jpmp) * factorial(jmmp) * factorial(jpm) * factorial(jmm));

  int smin = std::max(0, -mpm);
  int smax = std::min(jpm, jmmp);
  long double sum = 0.0L;
  for (int k = smin; k <= smax; ++k) {
    long double den = factorial(jpm - k) * factorial(k) * factorial(mpm + k) * factorial(jmmp - k);
    int pc = 2 * j.twice() + m.twice() - mp.twice() - 4 * k;
    int ps = mp.twice() - m.twice() + 4 * k;
    long double term = std::pow(static_cast<long double>(c), pc / 2) * std::pow(static_cast<long double>(s), ps / 2);
    sum += parity_sign(mpm + k) * term / den;
  }
  return static_cast<double>(norm * sum);
}

Eigen::MatrixXd small_d_matrix(HalfInt j, double beta) {
  const int n = j.twice() + 1;
  Eigen::MatrixXd d(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      d(r, c) = wigner_small_d(j, HalfInt::from_twice(j.twice() - 2 * r), HalfInt::from_twice(j.twice() - 2 * c), beta);
    }
  }
  return d;
}

}  // namespace spinqd
