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

#include "spinqd/dicke.hpp"

#include <cmath>
#include <numbers>

#include "spinqd/angular.hpp"
#include "spinqd/error.hpp"
#include "spinqd/quadrature.hpp"

namespace spinqd {

std::vector<std::string> dicke_regime_warnings(const DickeParams& p) {
  std::vector<std::string> w;
  if (p.nbar < 5.0 * p.n_atoms) w.push_back("nbar < 5 N: outside the strong-field regime");
  if (p.g > 0.0 && p.gamma / p.g > 0.1 * std::sqrt(p.nbar)) w.push_back("gamma / g is not small against sqrt(nbar)");
  return w;
}

DressedBasis dressed_basis(int n_atoms) {
  if (n_atoms < 1) throw DomainError("at least one atom required");
  const HalfInt j = HalfInt::from_twice(n_atoms);
  DressedBasis b;
  b.C = CMatrix::Zero(n_atoms + 1, n_atoms + 1);
  b.lambdas.resize(n_atoms + 1);
  for (int q = 0; q <= n_atoms; ++q) {
    b.lambdas(q) = q - 0.5 * n_atoms;
    for (int k = 0; k <= n_atoms; ++k) {
      HalfInt mq = HalfInt::from_twice(2 * q - n_atoms);
      HalfInt mk = HalfInt::from_twice(2 * k - n_atoms);
      b.C(q, k) = wigner_small_d(j, mq, mk, -std::numbers::pi / 2.0);
    }
  }
  return b;
}

CMatrix collective_sx(int n_atoms) {
  const double j = 0.5 * n_atoms;
  CMatrix sx = CMatrix::Zero(n_atoms + 1, n_atoms + 1);
  for (int k = 0; k < n_atoms; ++k) {
    double m = k - j;
    double v = 0.5 * std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    sx(k + 1, k) = v;
    sx(k, k + 1) = v;
  }
  return sx;
}

namespace {

struct CSum {
  CompensatedSum re, im;
  void add(cplx v) {
    re.add(v.real());
    im.add(v.imag());
  }
  cplx value() const { return {re.value(), im.value()}; }
};

double log_alpha(double nt, int n) {
  return -0.5 * nt + 0.5 * n * std::log(nt) - 0.5 * std::lgamma(n + 1.0);
}

}  // namespace

CMatrix evolve_dicke_bare(const DickeParams& p, double t, const DickeOptions& opt, DickeDiagnostics* diag) {
  if (t < 0.0) throw DomainError("negative time");
  if (p.n_atoms < 1 || !(p.nbar > 0.0)) throw DomainError("invalid Dicke parameters");
  const int N = p.n_atoms;
  const DressedBasis basis = dressed_basis(N);
  const Eigen::MatrixXd R = basis.C.real();
  const Eigen::VectorXd& lam = basis.lambdas;
  const double nt = p.nbar * std::exp(-p.gamma * t);
  const int n_max = opt.n_max > 0 ? opt.n_max : static_cast<int>(std::ceil(p.nbar + 12.0 * std::sqrt(p.nbar)));
  const int a_max = n_max + N;  // largest photon index reached by n + k

  DickeDiagnostics d;
  d.n_max = n_max;

  // Poisson tail beyond a_max: terms decrease at least geometrically with ratio nt / (a_max + 2).
  const double ratio = nt / (a_max + 2.0);
  if (ratio >= 1.0) throw NumericalError("photon cutoff below the mean photon number");
  d.tail_bound = std::exp(2.0 * log_alpha(nt, a_max + 1)) / (1.0 - ratio);
  if (d.tail_bound > opt.tail_tolerance) throw NumericalError("photon-number tail bound not met", d.tail_bound);

  std::vector<double> alpha(a_max + 1);
  for (int a = 0; a <= a_max; ++a) alpha[a] = std::exp(log_alpha(nt, a));

  // u(a, q) = exp(-2 i g t lambda_q sqrt(a_N)); undefined where a_N < 0.
  const double shift = 0.5 - 0.5 * N;
  int a_min = 0;
  while (a_min + shift < 0.0) ++a_min;
  for (int a = 0; a < a_min; ++a) d.skipped_weight += alpha[a] * alpha[a];
  if (d.skipped_weight > opt.max_skipped_weight)
    throw NumericalError("photon numbers with n_N < 0 carry non-negligible weight (out of regime)", d.skipped_weight);

  CMatrix u(a_max + 1, N + 1);
  for (int a = a_min; a <= a_max; ++a)
    for (int q = 0; q <= N; ++q) u(a, q) = std::polar(1.0, -2.0 * p.g * t * lam(q) * std::sqrt(a + shift));

  // E(p, q) = exp(-Theta_pq), gamma' = gamma + i g (lambda_p - lambda_q) / sqrt(nbar(t) - N/2 + 1/2).
  CMatrix E = CMatrix::Ones(N + 1, N + 1);
  if (p.gamma != 0.0 && t != 0.0) {
    const double denom = std::sqrt(nt - 0.5 * N + 0.5);
    for (int a = 0; a <= N; ++a) {
      for (int b = 0; b <= N; ++b) {
        if (a == b) continue;
        cplx gp(p.gamma, p.g * (lam(a) - lam(b)) / denom);
        cplx theta = p.nbar * ((1.0 - std::exp(-p.gamma * t)) - (p.gamma / gp) * (1.0 - std::exp(-gp * t)));
        E(a, b) = std::exp(-theta);
      }
    }
  }

  CMatrix rho = CMatrix::Zero(N + 1, N + 1);
  Eigen::VectorXcd v(N + 1), w(N + 1);
  for (int k = 0; k <= N; ++k) {
    for (int l = 0; l <= N; ++l) {
      CSum sum;
      for (int n = 0; n + std::max(k, l) <= a_max; ++n) {
        const int a = n + k, b = n + l;
        if (a < a_min || b < a_min) continue;
        const double weight = alpha[a] * alpha[b];
        if (weight == 0.0) continue;
        cplx acc(0.0, 0.0);
        if (!opt.swap_g_indices) {
          // sum_{p,q} R_pl R_p0 u_p(a) E_pq R_qk R_q0 conj(u_q(b))
          for (int i = 0; i <= N; ++i) {
            v(i) = R(i, l) * R(i, 0) * u(a, i);
            w(i) = R(i, k) * R(i, 0) * std::conj(u(b, i));
          }
          acc = v.transpose() * E * w;
        } else {
          // sum_{p,q} R_qk R_q0 u_q(a) E_qp R_pl R_p0 conj(u_p(b))
          for (int i = 0; i <= N; ++i) {
            v(i) = R(i, k) * R(i, 0) * u(a, i);
            w(i) = R(i, l) * R(i, 0) * std::conj(u(b, i));
          }
          acc = v.transpose() * E * w;
        }
        sum.add(weight * acc);
      }
      rho(k, l) = sum.value();
    }
  }
  d.trace_drift = std::abs(rho.trace() - cplx(1.0, 0.0));
  if (diag) *diag = d;
  return rho;
}

CMatrix bare_to_library(const CMatrix& bare) { return bare.reverse(); }

DensityMatrix evolve_dicke(const DickeParams& p, double t, const DickeOptions& opt, DickeDiagnostics* diag) {
  DickeDiagnostics d;
  CMatrix bare = evolve_dicke_bare(p, t, opt, &d);
  if (diag) *diag = d;
  if (d.trace_drift > 1e-6) throw NumericalError("Dicke density matrix trace drift", d.trace_drift);
  bare /= bare.trace();
  return DensityMatrix({HalfInt::from_twice(p.n_atoms)}, bare_to_library(bare));
}

std::vector<Spin2Fixture> spin2_multipole_fixtures() {
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
  auto mat = [](std::initializer_list<std::initializer_list<double>> rows, double scale) {
    CMatrix m = CMatrix::Zero(5, 5);
    int r = 0;
    for (const auto& row : rows) {
      int c = 0;
      for (double v : row) m(r, c++) = v * scale;
      ++r;
    }
    return m;
  };
  std::vector<Spin2Fixture> f;
  f.push_back({0, 0, mat({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}, 1 / std::sqrt(5.0))});
  f.push_back({1, 1, mat({{0, 0, 0, 0, 0}, {-s2, 0, 0, 0, 0}, {0, -s3, 0, 0, 0}, {0, 0, -s3, 0, 0}, {0, 0, 0, -s2, 0}}, 1 / std::sqrt(10.0))});
  f.push_back({1, 0, mat({{-2, 0, 0, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 2}}, 1 / std::sqrt(10.0))});
  f.push_back({2, 2, mat({{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {s2, 0, 0, 0, 0}, {0, s3, 0, 0, 0}, {0, 0, s2, 0, 0}}, 1 / std::sqrt(7.0))});
  f.push_back({2, 1, mat({{0, 0, 0, 0, 0}, {s6, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, -1, 0, 0}, {0, 0, 0, -s6, 0}}, 1 / std::sqrt(14.0))});
  // Entry (3,3) is -1, which makes the matrix traceless.
  f.push_back({2, 0, mat({{2, 0, 0, 0, 0}, {0, -1, 0, 0, 0}, {0, 0, -2, 0, 0}, {0, 0, 0, -1, 0}, {0, 0, 0, 0, 2}}, 1 / std::sqrt(14.0))});
  f.push_back({3, 3, mat({{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}}, -1 / s2)});
  f.push_back({3, 2, mat({{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {-1, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 1, 0, 0}}, 1 / s2)});
  f.push_back({3, 1, mat({{0, 0, 0, 0, 0}, {-s3, 0, 0, 0, 0}, {0, s2, 0, 0, 0}, {0, 0, s2, 0, 0}, {0, 0, 0, -s3, 0}}, 1 / std::sqrt(10.0))});
  f.push_back({3, 0, mat({{-1, 0, 0, 0, 0}, {0, 2, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, -2, 0}, {0, 0, 0, 0, 1}}, 1 / std::sqrt(10.0))});
  f.push_back({4, 4, mat({{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}}, 1.0)});
  f.push_back({4, 3, mat({{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, -1, 0, 0, 0}}, 1 / s2)});
  f.push_back({4, 2, mat({{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {s3, 0, 0, 0, 0}, {0, -2 * s2, 0, 0, 0}, {0, 0, s3, 0, 0}}, 1 / std::sqrt(14.0))});
  f.push_back({4, 1, mat({{0, 0, 0, 0, 0}, {1, 0, 0, 0, 0}, {0, -s6, 0, 0, 0}, {0, 0, s6, 0, 0}, {0, 0, 0, -1, 0}}, 1 / std::sqrt(14.0))});
  f.push_back({4, 0, mat({{1, 0, 0, 0, 0}, {0, -4, 0, 0, 0}, {0, 0, 6, 0, 0}, {0, 0, 0, -4, 0}, {0, 0, 0, 0, 1}}, 1 / std::sqrt(70.0))});
  return f;
}

}  // namespace spinqd
