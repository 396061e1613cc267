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

#include "spinqd/closed_form.hpp"

#include <cmath>
#include <numbers>

#include "spinqd/error.hpp"

namespace spinqd {
namespace {

using std::cos;
using std::sin;
using std::sqrt;

constexpr double kPi = std::numbers::pi;
const double kSqrt3 = std::sqrt(3.0);

void expect_points(const std::vector<SphericalPoint>& pts, std::size_t n) {
  if (pts.size() != n) throw DomainError("closed form expects " + std::to_string(n) + " angle pairs");
}

// Spin-1/2 forms share W == F.
QDKind spin_half_kind(QDKind k) { return k == QDKind::F ? QDKind::W : k; }

double qnd_qubit(QDKind kind, const ClosedFormParams& c, SphericalPoint x) {
  const double decay = std::exp(-c.omega * c.omega * c.gamma_t);
  const double z = cos(c.alpha) * cos(x.theta);
  const double r = decay * cos(c.beta + c.omega * c.t + x.phi) * sin(c.alpha) * sin(x.theta);
  switch (spin_half_kind(kind)) {
    case QDKind::W: return (1.0 - kSqrt3 * z + kSqrt3 * r) / (4.0 * kPi);
    case QDKind::P: return (1.0 + 3.0 * z + 3.0 * r) / (4.0 * kPi);
    default: return (1.0 + z + r) / (4.0 * kPi);
  }
}

double sgad_qubit(QDKind kind, const ClosedFormParams& c, SphericalPoint x) {
  const double lam = c.lambda, mu = c.mu, nu = c.nu, p = c.p;
  const double zb = -mu + nu - p * (lam - mu + nu) + (-1.0 + mu + nu + p * (lam - mu - nu)) * cos(c.alpha);
  const double xb = ((p * sqrt(1.0 - lam) + (1.0 - p) * sqrt((1.0 - mu) * (1.0 - nu))) * cos(c.beta + x.phi) +
                     (1.0 - p) * sqrt(mu * nu) * cos(c.beta + c.xi - x.phi)) *
                    sin(c.alpha) * sin(x.theta);
  const double z = zb * cos(x.theta);
  switch (spin_half_kind(kind)) {
    case QDKind::W: return (1.0 + kSqrt3 * z + kSqrt3 * xb) / (4.0 * kPi);
    case QDKind::P: return (1.0 - 3.0 * z + 3.0 * xb) / (4.0 * kPi);
    default: return (1.0 - z + xb) / (4.0 * kPi);
  }
}

double ad_epr(QDKind kind, const ClosedFormParams& c, const std::vector<SphericalPoint>& x) {
  const double lam = c.lambda;
  const double c1 = cos(x[0].theta), c2 = cos(x[1].theta);
  const double ss = sin(x[0].theta) * sin(x[1].theta) * cos(x[0].phi - x[1].phi);
  double v = 0.0;
  switch (spin_half_kind(kind)) {
    case QDKind::W:
      v = lam * (1.0 + 3.0 * c1 * c2 - kSqrt3 * (c1 + c2)) + (1.0 - lam) * (1.0 - 3.0 * c1 * c2 - 3.0 * ss);
      break;
    case QDKind::P:
      v = lam * (1.0 + 9.0 * c1 * c2 + 3.0 * (c1 + c2)) + (1.0 - lam) * (1.0 - 9.0 * c1 * c2 - 9.0 * ss);
      break;
    default:
      v = lam * (1.0 + c1 * c2 + (c1 + c2)) + (1.0 - lam) * (1.0 - c1 * c2 - ss);
  }
  return v / (16.0 * kPi * kPi);
}

double ad_ghz(QDKind kind, const ClosedFormParams& c, const std::vector<SphericalPoint>& x, Transcription tr) {
  const double lam = c.lambda;
  const double c1 = cos(x[0].theta), c2 = cos(x[1].theta), c3 = cos(x[2].theta);
  const double sss = sin(x[0].theta) * sin(x[1].theta) * sin(x[2].theta) * cos(x[0].phi + x[1].phi + x[2].phi);
  const double coh = sqrt(1.0 - lam) * sss;
  const double s = tr == Transcription::as_printed ? -1.0 : 1.0;
  double v = 0.0;
  switch (spin_half_kind(kind)) {
    case QDKind::W:
      v = 1.0 - kSqrt3 * lam * c1 + 3.0 * c2 * c3 + 3.0 * (1.0 - lam) * c1 * (c2 + c3) -
          3.0 * kSqrt3 * (lam * c1 * c2 * c3 - coh);
      break;
    case QDKind::P:
      v = 1.0 + 3.0 * lam * c1 + 9.0 * c2 * c3 + 9.0 * (1.0 - lam) * c1 * (c2 + c3) +
          27.0 * (lam * c1 * c2 * c3 + s * coh);
      break;
    default:
      v = 1.0 + lam * c1 + c2 * c3 + (1.0 - lam) * c1 * (c2 + c3) + lam * c1 * c2 * c3 + s * coh;
  }
  return v / (64.0 * kPi * kPi * kPi);
}

double ad_w(QDKind kind, const ClosedFormParams& c, const std::vector<SphericalPoint>& x) {
  const double lam = c.lambda;
  const double r = sqrt(1.0 - lam);
  const double c1 = cos(x[0].theta), c2 = cos(x[1].theta), c3 = cos(x[2].theta);
  const double s1 = sin(x[0].theta), s2 = sin(x[1].theta), s3 = sin(x[2].theta);
  const double k12 = cos(x[0].phi - x[1].phi), k13 = cos(x[0].phi - x[2].phi), k23 = cos(x[1].phi - x[2].phi);
  const double pairs = c1 * c2 + c2 * c3 + c1 * c3;
  const double singles = c1 + c2 + c3;
  const double triple = c1 * c2 * c3;
  auto h = [](double th) { return sin(0.5 * th) * sin(0.5 * th); };
  switch (spin_half_kind(kind)) {
    case QDKind::W: {
      double v = 1.0 - pairs + kSqrt3 / 3.0 * singles - 3.0 * kSqrt3 * triple + 2.0 * (1.0 + kSqrt3 * c1) * s2 * s3 * k23 +
                 2.0 * r * ((1.0 + kSqrt3 * c2) * s1 * s3 * k13 + (1.0 + kSqrt3 * c3) * s1 * s2 * k12) +
                 4.0 * kSqrt3 * lam * c1 * (-1.0 / 3.0 + c2 * c3 - s2 * s3 * k23);
      return v / (64.0 * kPi * kPi * kPi);
    }
    case QDKind::P: {
      double v = 1.0 - 3.0 * pairs - singles + 27.0 * triple + 6.0 * (1.0 - 3.0 * c1) * s2 * s3 * k23 +
                 6.0 * r * ((1.0 - 3.0 * c2) * s1 * s3 * k13 + (1.0 - 3.0 * c3) * s1 * s2 * k12) +
                 4.0 * lam * c1 * (1.0 - 9.0 * c2 * c3 + 9.0 * s2 * s3 * k23);
      return v / (64.0 * kPi * kPi * kPi);
    }
    default: {
      double v = 3.0 - pairs - singles + 3.0 * triple + 4.0 * h(x[0].theta) * s2 * s3 * k23 +
                 4.0 * r * (s1 * h(x[1].theta) * s3 * k13 + s1 * s2 * h(x[2].theta) * k12) +
                 4.0 * lam * c1 * (1.0 - c2 * c3 + s2 * s3 * k23);
      return v / (192.0 * kPi * kPi * kPi);
    }
  }
}

double spin1_pure(QDKind kind, const ClosedFormParams& c, SphericalPoint x, Transcription tr) {
  const cplx ap = c.a_plus, a0 = c.a_zero, am = c.a_minus;
  const double n = std::norm(ap) + std::norm(a0) + std::norm(am);
  if (std::abs(n - 1.0) > 1e-12) throw DomainError("spin-1 amplitudes not normalized");
  const double ct = cos(x.theta), st = sin(x.theta);
  const double a0sq = std::norm(a0);
  const double quad = ct * ct + a0sq - 3.0 * a0sq * ct * ct;
  const double diff = std::norm(ap) - std::norm(am);
  const cplx em = std::polar(1.0, -x.phi), ep = std::polar(1.0, x.phi), e2 = std::polar(1.0, 2.0 * x.phi);
  const cplx apam = ap * std::conj(am) * st * st * e2;
  const double s5 = sqrt(5.0), s2 = sqrt(2.0), s10 = sqrt(10.0);
  auto cc = [](cplx z) { return 2.0 * z.real(); };
  switch (kind) {
    case QDKind::W: {
      cplx z = 6.0 * a0 * st * (std::conj(ap) * em * (1.0 + s5 * ct) + std::conj(am) * ep * (1.0 - s5 * ct)) +
               3.0 * s10 * apam;
      return (4.0 - s10 + 3.0 * s10 * quad + 6.0 * s2 * diff * ct + cc(z)) / (16.0 * kPi);
    }
    case QDKind::P: {
      cplx z = s2 * a0 * st * (std::conj(ap) * em * (1.0 - 5.0 * ct) + std::conj(am) * ep * (1.0 + 5.0 * ct)) +
               5.0 * apam;
      return 3.0 / (8.0 * kPi) * (-1.0 + 5.0 * quad - 2.0 * diff * ct + cc(z));
    }
    case QDKind::Q: {
      const double k = tr == Transcription::as_printed ? 5.0 : 1.0;
      cplx z = s2 * a0 * st * (std::conj(ap) * em * (1.0 - ct) + std::conj(am) * ep * (1.0 + ct)) + k * apam;
      return 3.0 / (16.0 * kPi) * (1.0 + quad - 2.0 * diff * ct + cc(z));
    }
    case QDKind::F: {
      cplx z = a0 * st * (std::conj(ap) * em * (4.0 + 5.0 * s2 * ct) + std::conj(am) * ep * (4.0 - 5.0 * s2 * ct)) +
               5.0 * apam;
      return 3.0 / (32.0 * kPi) * (1.0 + 5.0 * quad + 4.0 * s2 * diff * ct + cc(z));
    }
  }
  return 0.0;
}

}  // namespace

std::string to_string(OracleId id) {
  switch (id) {
    case OracleId::QndQubit: return "qnd-qubit";
    case OracleId::SgadQubit: return "sgad-qubit";
    case OracleId::AdEpr: return "ad-epr";
    case OracleId::AdGhz: return "ad-ghz";
    case OracleId::AdW: return "ad-w";
    case OracleId::Spin1Pure: return "spin1-pure";
  }
  return "?";
}

OracleId oracle_from_string(const std::string& s) {
  for (OracleId id : {OracleId::QndQubit, OracleId::SgadQubit, OracleId::AdEpr, OracleId::AdGhz, OracleId::AdW,
                      OracleId::Spin1Pure})
    if (to_string(id) == s) return id;
  throw ConfigError("unknown closed-form id: " + s);
}

double closed_form(OracleId id, QDKind kind, const ClosedFormParams& params, const std::vector<SphericalPoint>& points,
                   Transcription tr) {
  switch (id) {
    case OracleId::QndQubit:
    case OracleId::SgadQubit: {
      expect_points(points, 1);
      SphericalPoint x = points[0];
      if (tr == Transcription::corrected) x.phi = -x.phi;
      return id == OracleId::QndQubit ? qnd_qubit(kind, params, x) : sgad_qubit(kind, params, x);
    }
    case OracleId::AdEpr:
      expect_points(points, 2);
      return ad_epr(kind, params, points);
    case OracleId::AdGhz:
      expect_points(points, 3);
      return ad_ghz(kind, params, points, tr);
    case OracleId::AdW:
      expect_points(points, 3);
      return ad_w(kind, params, points);
    case OracleId::Spin1Pure:
      expect_points(points, 1);
      return spin1_pure(kind, params, points[0], tr);
  }
  throw DomainError("unknown closed form");
}

}  // namespace spinqd
