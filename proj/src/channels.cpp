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

#include "spinqd/channels.hpp"

#include <cmath>
#include <numbers>

#include "spinqd/error.hpp"
#include "spinqd/quadrature.hpp"

namespace spinqd {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCutoffMultiple = 40.0;

// Integration panels sized to resolve oscillations of period 2 pi / freq.
int panel_count(double upper, double freq) {
  double n = upper * freq / (2.0 * kPi);
  return static_cast<int>(std::clamp(std::ceil(n) + 4.0, 8.0, 20000.0));
}

double coth_half(double w, double temperature) {
  if (temperature <= 0.0) return 1.0;
  double x = w / (2.0 * temperature);
  if (x > 40.0) return 1.0;
  return 1.0 / std::tanh(x);
}

void check_probability(double v, const char* name) {
  if (!(v >= -1e-12 && v <= 1.0 + 1e-12)) throw DomainError(std::string(name) + " outside [0, 1]: " + std::to_string(v));
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

double KrausChannel::completeness_residual() const {
  if (ops.empty()) return 0.0;
  const Eigen::Index n = ops.front().rows();
  CMatrix s = CMatrix::Zero(n, n);
  for (const auto& e : ops) s += e.adjoint() * e;
  return (s - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

double qnd_decoherence_gamma(const BathParams& b, double t) {
  if (t < 0.0) throw DomainError("negative time");
  if (t == 0.0 || b.gamma0 == 0.0) return 0.0;
  const double ch = std::cosh(b.r), sh = std::sinh(b.r);
  auto f = [&](double w) {
    if (w <= 0.0) return 0.0;
    double s = std::sin(0.5 * w * t);
    std::complex<double> amp = std::polar(ch, 0.5 * w * t) - std::polar(sh, 2.0 * b.a * w - 0.5 * w * t);
    double mod = 4.0 * s * s * std::norm(amp);
    return 0.5 * (b.gamma0 / kPi) * std::exp(-w / b.omega_c) / w * coth_half(w, b.temperature) * mod;
  };
  const double upper = kCutoffMultiple * b.omega_c;
  const double freq = t + 2.0 * std::abs(b.a);
  return integrate_adaptive(f, 0.0, upper, panel_count(upper, freq), kBathRelTol).value;
}

double qnd_phase_eta(const BathParams& b, double t) {
  if (t < 0.0) throw DomainError("negative time");
  if (t == 0.0 || b.gamma0 == 0.0) return 0.0;
  auto f = [&](double w) {
    if (w <= 0.0) return -(b.gamma0 / kPi) * t;
    return -(b.gamma0 / kPi) * std::exp(-w / b.omega_c) * std::sin(w * t) / w;
  };
  const double upper = kCutoffMultiple * b.omega_c;
  return integrate_adaptive(f, 0.0, upper, panel_count(upper, t), kBathRelTol, 1e-12).value;
}

DensityMatrix qnd_evolve_spin(const DensityMatrix& rho0, const BathParams& b, double t) {
  if (rho0.spins.size() != 1) throw DomainError("single spin expected");
  const double g = qnd_decoherence_gamma(b, t);
  const int twoj = rho0.spins[0].twice();
  const double eta = twoj >= 2 ? qnd_phase_eta(b, t) : 0.0;
  const double w = b.omega;
  CMatrix out = rho0.data;
  for (int r = 0; r <= twoj; ++r) {
    double m = 0.5 * (twoj - 2 * r);
    for (int c = 0; c <= twoj; ++c) {
      double n = 0.5 * (twoj - 2 * c);
      double phase = -w * (m - n) * t + w * w * (m * m - n * n) * eta;
      out(r, c) *= std::polar(std::exp(-w * w * (m - n) * (m - n) * g), phase);
    }
  }
  return DensityMatrix(rho0.spins, out);
}

DensityMatrix qnd_evolve_qubit(const DensityMatrix& rho0, const BathParams& b, double t) {
  if (rho0.spins.size() != 1 || rho0.spins[0] != kHalf) throw DomainError("single qubit expected");
  return qnd_evolve_spin(rho0, b, t);
}

double thermal_occupation(const BathParams& b) {
  if (b.temperature <= 0.0) return 0.0;
  return 1.0 / std::expm1(b.omega / b.temperature);
}

namespace {

double sgad_total_n(const BathParams& b) {
  const double nth = thermal_occupation(b);
  const double ch = std::cosh(b.r), sh = std::sinh(b.r);
  return nth * (ch * ch + sh * sh) + sh * sh;
}

}  // namespace

double sgad_default_p(const BathParams& b) {
  if (b.r != 0.0) throw ConfigError("SGAD mixing weight p is required when the bath is squeezed");
  const double n = sgad_total_n(b);
  return (n + 1.0) / (2.0 * n + 1.0);
}

SgadParams sgad_params(const BathParams& b, std::optional<double> p_opt, double t, double xi) {
  if (t < 0.0) throw DomainError("negative time");
  const double p = p_opt ? *p_opt : sgad_default_p(b);
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("SGAD p must lie in (0, 1]");
  SgadParams s;
  s.p = p;
  s.xi = xi;
  if (t == 0.0) return s;

  const double nth = thermal_occupation(b);
  const double n = sgad_total_n(b);
  const double a = std::sinh(2.0 * b.r) * (2.0 * nth + 1.0);
  const double k = b.gamma0 * (2.0 * n + 1.0);
  const double decay = std::exp(-k * t);
  const double one_minus_decay = -std::expm1(-k * t);

  if (n == 0.0) {
    s.nu = 0.0;
    s.mu = 0.0;
  } else if (p == 1.0) {
    throw DomainError("SGAD p = 1 is singular for a thermal or squeezed bath");
  } else {
    s.nu = n / ((1.0 - p) * (2.0 * n + 1.0)) * one_minus_decay;
    if (a == 0.0) {
      s.mu = 0.0;
    } else {
      double num = std::sinh(0.5 * b.gamma0 * a * t);
      double den = std::sinh(0.5 * k * t);
      s.mu = (2.0 * n + 1.0) / (2.0 * n * (1.0 - p)) * (num * num) / (den * den) * std::exp(-0.5 * k * t);
    }
  }
  s.lambda = (1.0 - (1.0 - p) * (s.mu + s.nu) - decay) / p;
  return s;
}

KrausChannel sgad_kraus(const SgadParams& s) {
  check_probability(s.lambda, "lambda");
  check_probability(s.mu, "mu");
  check_probability(s.nu, "nu");
  check_probability(s.p, "p");
  const double lam = clamp01(s.lambda), mu = clamp01(s.mu), nu = clamp01(s.nu), p = clamp01(s.p);
  const double sp = std::sqrt(p), sq = std::sqrt(1.0 - p);
  KrausChannel ch;
  ch.spins = {kHalf};
  CMatrix e0 = CMatrix::Zero(2, 2), e1 = CMatrix::Zero(2, 2), e2 = CMatrix::Zero(2, 2), e3 = CMatrix::Zero(2, 2);
  e0(0, 0) = sp * std::sqrt(1.0 - lam);
  e0(1, 1) = sp;
  e1(1, 0) = sp * std::sqrt(lam);
  e2(0, 0) = sq * std::sqrt(1.0 - mu);
  e2(1, 1) = sq * std::sqrt(1.0 - nu);
  e3(0, 1) = sq * std::sqrt(nu);
  e3(1, 0) = sq * std::sqrt(mu) * std::polar(1.0, -s.xi);
  for (CMatrix* e : {&e0, &e1, &e2, &e3})
    if (e->cwiseAbs().maxCoeff() > 0.0) ch.ops.push_back(*e);
  return ch;
}

KrausChannel ad_kraus(double lambda) {
  SgadParams s;
  s.lambda = lambda;
  return sgad_kraus(s);
}

KrausChannel identity_channel(HalfInt j) {
  const int n = j.twice() + 1;
  return KrausChannel{{j}, {CMatrix::Identity(n, n)}};
}

KrausChannel tensor_channel(const std::vector<KrausChannel>& factors) {
  KrausChannel out;
  out.ops.push_back(CMatrix::Identity(1, 1));
  for (const auto& f : factors) {
    out.spins.insert(out.spins.end(), f.spins.begin(), f.spins.end());
    std::vector<CMatrix> next;
    for (const auto& a : out.ops)
      for (const auto& e : f.ops) next.push_back(kron(a, e));
    out.ops = std::move(next);
  }
  return out;
}

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.spins != rho.spins) throw DomainError("channel and state act on different spaces");
  CMatrix out = CMatrix::Zero(rho.size(), rho.size());
  for (const auto& e : ch.ops) out += e * rho.data * e.adjoint();
  return DensityMatrix(rho.spins, out);
}

double two_qubit_theta(const BathParams& b, double kr, double t) {
  if (t < 0.0) throw DomainError("negative time");
  if (t == 0.0 || b.gamma0 == 0.0) return 0.0;
  const double ts = kr / b.omega;
  auto f = [&](double w) {
    if (w <= 0.0) return 0.0;
    double s = (w * t - std::sin(w * t)) / (w * w);
    return (b.gamma0 / kPi) * w * std::exp(-w / b.omega_c) * s * std::cos(w * ts);
  };
  const double upper = kCutoffMultiple * b.omega_c;
  return integrate_adaptive(f, 0.0, upper, panel_count(upper, t + ts), kBathRelTol, 1e-12).value;
}

double two_qubit_lambda(const BathParams& b, double kr, double t) {
  if (t < 0.0) throw DomainError("negative time");
  if (t == 0.0 || b.gamma0 == 0.0) return 0.0;
  const double ts = kr / b.omega;
  auto f = [&](double w) {
    if (w <= 0.0) return 0.0;
    double c = (1.0 - std::cos(w * t)) / (w * w);
    return (b.gamma0 / kPi) * w * std::exp(-w / b.omega_c) * c * std::sin(w * ts);
  };
  const double upper = kCutoffMultiple * b.omega_c;
  return -integrate_adaptive(f, 0.0, upper, panel_count(upper, t + ts), kBathRelTol, 1e-12).value;
}

namespace {

// Total projection m1 + m2 of library index i (0 -> both +1/2).
double total_m(int i) { return (i == 0) ? 1.0 : (i == 3 ? -1.0 : 0.0); }

// Library index -> 4-level label of the localized-model tables,
// pairs written as (m2, m1): 0=(-,-), 1=(-,+), 2=(+,-), 3=(+,+).
int table_label(int i) {
  static constexpr int map[4] = {3, 1, 2, 0};
  return map[i];
}

}  // namespace

double two_qubit_phase(int row, int col, double theta, double lambda) {
  const int a = table_label(row), c = table_label(col);
  // Coherences (3,2) and (0,1) carry +(Theta - Lambda); (3,1), (0,2) carry +(Theta + Lambda).
  auto is = [&](int x, int y) { return a == x && c == y; };
  if (is(3, 2) || is(0, 1)) return theta - lambda;
  if (is(2, 3) || is(1, 0)) return -(theta - lambda);
  if (is(3, 1) || is(0, 2)) return theta + lambda;
  if (is(1, 3) || is(2, 0)) return -(theta + lambda);
  return 0.0;
}

GammaSq default_gamma_sq(const BathParams& b) {
  return [b](int row, int col, double t) {
    double de = b.omega * (total_m(row) - total_m(col));
    if (de == 0.0) return 0.0;
    return de * de * qnd_decoherence_gamma(b, t);
  };
}

DensityMatrix two_qubit_qnd_evolve(const DensityMatrix& rho0, const BathParams& b, double kr, double t,
                                   const GammaSq& gamma_sq, bool strict) {
  if (rho0.spins != std::vector<HalfInt>{kHalf, kHalf}) throw DomainError("two qubits expected");
  if (!gamma_sq && strict) throw ConfigError("decoherence functional Gamma^sq not supplied (strict mode)");
  if (t < 0.0) throw DomainError("negative time");
  const GammaSq g = gamma_sq ? gamma_sq : default_gamma_sq(b);
  const double theta = two_qubit_theta(b, kr, t);
  const double lambda = two_qubit_lambda(b, kr, t);
  CMatrix out = rho0.data;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (r == c) continue;
      out(r, c) *= std::polar(std::exp(-g(r, c, t)), two_qubit_phase(r, c, theta, lambda));
    }
  }
  return DensityMatrix(rho0.spins, out);
}

}  // namespace spinqd
