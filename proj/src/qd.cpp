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

#include "spinqd/qd.hpp"

#include <cmath>
#include <numbers>

#include "spinqd/error.hpp"

namespace spinqd {

std::string to_string(QDKind k) {
  switch (k) {
    case QDKind::W: return "W";
    case QDKind::P: return "P";
    case QDKind::Q: return "Q";
    case QDKind::F: return "F";
  }
  return "?";
}

QDKind qd_kind_from_string(const std::string& s) {
  if (s == "W" || s == "w") return QDKind::W;
  if (s == "P" || s == "p") return QDKind::P;
  if (s == "Q" || s == "q") return QDKind::Q;
  if (s == "F" || s == "f") return QDKind::F;
  throw ConfigError("unknown quasiprobability kind: " + s);
}

double kernel_weight(QDKind kind, HalfInt j, int K, int Q) {
  const int J = j.twice();
  if (J < 0 || K < 0 || K > J || std::abs(Q) > K) throw DomainError("kernel weight index out of range");
  const long double inv_sqrt4pi = 1.0L / std::sqrt(4.0L * std::numbers::pi_v<long double>);
  const long double sign = ((K - Q) % 2 == 0) ? 1.0L : -1.0L;
  const long double jj = 0.5L * J;
  switch (kind) {
    case QDKind::W:
      return static_cast<double>(std::sqrt((J + 1.0L)) * inv_sqrt4pi);
    case QDKind::P:
      return static_cast<double>(inv_sqrt4pi * sign * std::sqrt(factorial(J - K) * factorial(J + K + 1)) / factorial(J));
    case QDKind::Q:
      return static_cast<double>(inv_sqrt4pi * sign * (J + 1.0L) * factorial(J) /
                                 std::sqrt(factorial(J - K) * factorial(J + K + 1)));
    case QDKind::F: {
      long double r = factorial(J + K + 1) / (factorial(J - K) * std::pow(jj * (jj + 1.0L), K));
      return static_cast<double>(inv_sqrt4pi * std::pow(0.5L, K) * std::sqrt(r));
    }
  }
  return 0.0;
}

QDEvaluator::QDEvaluator(QDKind kind, const MultipoleCoeffs& c) : kind_(kind), spins_(c.spins) {
  for (std::size_t f = 0; f < c.values.size(); ++f) {
    if (c.values[f] == cplx(0.0, 0.0)) continue;
    Term t{c.values[f], {}};
    for (const KQ& kq : c.unflatten(f)) t.l.push_back(kq_index(kq.K, kq.Q));
    terms_.push_back(std::move(t));
  }
  for (HalfInt j : spins_) {
    std::vector<double> w;
    for (int K = 0; K <= j.twice(); ++K)
      for (int Q = -K; Q <= K; ++Q) w.push_back(kernel_weight(kind, j, K, Q));
    weights_.push_back(std::move(w));
  }
}

cplx QDEvaluator::raw(const std::vector<SphericalPoint>& points) const {
  if (points.size() != spins_.size()) throw DomainError("one angle pair per particle required");
  std::vector<std::vector<cplx>> table(spins_.size());
  for (std::size_t i = 0; i < spins_.size(); ++i) {
    const int J = spins_[i].twice();
    table[i].reserve((J + 1) * (J + 1));
    for (int K = 0; K <= J; ++K)
      for (int Q = -K; Q <= K; ++Q)
        table[i].push_back(weights_[i][kq_index(K, Q)] * spherical_harmonic(K, Q, points[i]));
  }
  cplx sum(0.0, 0.0);
  for (const Term& t : terms_) {
    cplx v = t.value;
    for (std::size_t i = 0; i < t.l.size(); ++i) v *= table[i][t.l[i]];
    sum += v;
  }
  return sum;
}

double QDEvaluator::operator()(const std::vector<SphericalPoint>& points) const {
  cplx v = raw(points);
  if (std::abs(v.imag()) > kImagTolerance) throw DomainError("quasiprobability has a non-negligible imaginary part");
  return v.real();
}

double evaluate(QDKind kind, const MultipoleCoeffs& c, const std::vector<SphericalPoint>& points) {
  return QDEvaluator(kind, c)(points);
}

}  // namespace spinqd
