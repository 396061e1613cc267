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

#include "spinqd/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "spinqd/error.hpp"

namespace spinqd {
namespace {

GaussRule build_rule(int n) {
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    // recompute derivative at the converged node
    double p0 = 1.0, p1 = 0.0;
    for (int k = 1; k <= n; ++k) {
      double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
    }
    dp = n * (z * p0 - p1) / (z * z - 1.0);
    double w = 2.0 / ((1.0 - z * z) * dp * dp);
    r.x[i] = -z;
    r.x[n - 1 - i] = z;
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre order must be positive");
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n) {
  const GaussRule& r = gauss_legendre(n);
  const double h = 0.5 * (b - a), m = 0.5 * (b + a);
  CompensatedSum s;
  for (int i = 0; i < n; ++i) s.add(r.w[i] * f(m + h * r.x[i]));
  return h * s.value();
}

namespace {

struct Gk15 {
  double value;
  double l1;
};

Gk15 gk15(const std::function<double(double)>& f, double a, double b) {
  double err = 0.0, l1 = 0.0;
  double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 0, 0.0, &err, &l1);
  return {v, l1};
}

constexpr int kMaxDepth = 50;
constexpr long kMaxBisections = 200000;

// Accepts the bisected value once it agrees with the undivided one to tol * (b - a).
void bisect(const std::function<double(double)>& f, double a, double b, Gk15 whole, double tol_density, int depth,
            CompensatedSum& value, QuadResult& out, long& budget) {
  --budget;
  const double m = 0.5 * (a + b);
  Gk15 left = gk15(f, a, m), right = gk15(f, m, b);
  const double err = std::abs(whole.value - (left.value + right.value));
  if (err <= tol_density * (b - a) || depth >= kMaxDepth || budget <= 0 || !(m > a && m < b)) {
    value.add(left.value);
    value.add(right.value);
    out.error += err;
    out.l1 += left.l1 + right.l1;
    return;
  }
  bisect(f, a, m, left, tol_density, depth + 1, value, out, budget);
  bisect(f, m, b, right, tol_density, depth + 1, value, out, budget);
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, int panels,
                              double rel_tol, double abs_floor) {
  if (panels < 1) panels = 1;
  const double h = (b - a) / panels;
  std::vector<Gk15> coarse(panels);
  double l1 = 0.0;
  for (int i = 0; i < panels; ++i) {
    double lo = a + i * h;
    double hi = (i + 1 == panels) ? b : lo + h;
    coarse[i] = gk15(f, lo, hi);
    l1 += coarse[i].l1;
  }
  const double tol_abs = 0.1 * rel_tol * std::max(l1, abs_floor);
  const double tol_density = tol_abs / std::abs(b - a);
  QuadResult out;
  CompensatedSum total;
  long budget = kMaxBisections;
  for (int i = 0; i < panels; ++i) {
    double lo = a + i * h;
    double hi = (i + 1 == panels) ? b : lo + h;
    bisect(f, lo, hi, coarse[i], tol_density, 0, total, out, budget);
  }
  out.value = total.value();
  if (!std::isfinite(out.value) || out.error > rel_tol * std::max(out.l1, abs_floor))
    throw NumericalError("adaptive quadrature did not converge", out.error);
  return out;
}

void CompensatedSum::add(double v) {
  double t = sum_ + v;
  if (std::abs(sum_) >= std::abs(v))
    comp_ += (sum_ - t) + v;
  else
    comp_ += (v - t) + sum_;
  sum_ = t;
}

}  // namespace spinqd
