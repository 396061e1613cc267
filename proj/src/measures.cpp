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

#include "spinqd/measures.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/tools/roots.hpp>

#include "spinqd/error.hpp"
#include "spinqd/quadrature.hpp"

namespace spinqd {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kPieceOrder = 24;

std::size_t tuple_count(std::size_t per_sphere, std::size_t spheres) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < spheres; ++i) {
    if (n > std::numeric_limits<std::size_t>::max() / per_sphere) return std::numeric_limits<std::size_t>::max();
    n *= per_sphere;
  }
  return n;
}

// Per-sphere table of c(kind) Y_KQ at a point, indexed by kq_index.
std::vector<cplx> harmonic_row(QDKind kind, HalfInt j, SphericalPoint p) {
  std::vector<cplx> row;
  for (int K = 0; K <= j.twice(); ++K)
    for (int Q = -K; Q <= K; ++Q) row.push_back(kernel_weight(kind, j, K, Q) * spherical_harmonic(K, Q, p));
  return row;
}

// A real function on one sphere, sum_{K,Q} a_KQ Y_KQ, evaluated at fixed phi through
// combined Legendre coefficients.
class SphereFunction {
 public:
  SphereFunction(int twoj, std::vector<cplx> a) : twoj_(twoj), a_(std::move(a)), legendre_(twoj) {}

  void set_phi(double phi) {
    b_.clear();
    for (int K = 0; K <= twoj_; ++K) {
      for (int M = 0; M <= K; ++M) {
        cplx v = a_[kq_index(K, M)] * std::polar(1.0, M * phi);
        if (M > 0) v += ((M % 2 == 0) ? 1.0 : -1.0) * a_[kq_index(K, -M)] * std::polar(1.0, -M * phi);
        if (std::abs(v.real()) > 0.0) b_.push_back({static_cast<unsigned>(K), static_cast<unsigned>(M), v.real()});
      }
    }
  }

  double operator()(double theta) const {
    legendre_(theta, table_);
    double s = 0.0;
    for (const auto& t : b_) s += t.coef * table_[t.K * (t.K + 1) / 2 + t.M];
    return s;
  }

 private:
  struct Term {
    unsigned K, M;
    double coef;
  };
  int twoj_;
  std::vector<cplx> a_;
  std::vector<Term> b_;
  SphLegendre legendre_;
  mutable std::vector<double> table_;
};

// integral over theta in [0, pi] of |f| sin(theta), split at sign changes.
double abs_theta_integral(const SphereFunction& f, int samples) {
  std::vector<double> cuts{0.0};
  double prev_t = 0.0, prev_v = f(0.0);
  for (int i = 1; i <= samples; ++i) {
    double t = kPi * i / samples;
    double v = f(t);
    if ((prev_v < 0.0 && v > 0.0) || (prev_v > 0.0 && v < 0.0)) {
      boost::uintmax_t iters = 100;
      auto tol = boost::math::tools::eps_tolerance<double>(52);
      auto r = boost::math::tools::toms748_solve([&](double x) { return f(x); }, prev_t, t, prev_v, v, tol, iters);
      cuts.push_back(0.5 * (r.first + r.second));
    }
    prev_t = t;
    prev_v = v;
  }
  cuts.push_back(kPi);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] <= cuts[i]) continue;
    sum += integrate_gl([&](double t) { return std::abs(f(t)) * std::sin(t); }, cuts[i], cuts[i + 1], kPieceOrder);
  }
  return sum;
}

// Effective coefficients of the last sphere after fixing points on the others.
std::vector<cplx> contract_last(const MultipoleCoeffs& c, const std::vector<std::vector<cplx>>& rows) {
  const std::size_t n = c.spins.size();
  const int ext_last = (c.spins.back().twice() + 1) * (c.spins.back().twice() + 1);
  std::vector<cplx> a(ext_last, cplx(0.0, 0.0));
  for (std::size_t f = 0; f < c.values.size(); ++f) {
    if (c.values[f] == cplx(0.0, 0.0)) continue;
    std::size_t rest = f;
    int l_last = static_cast<int>(rest % ext_last);
    rest /= ext_last;
    cplx v = c.values[f];
    for (std::size_t i = n - 1; i-- > 0;) {
      int ext = (c.spins[i].twice() + 1) * (c.spins[i].twice() + 1);
      v *= rows[i][rest % ext];
      rest /= ext;
    }
    a[l_last] += v;
  }
  return a;
}

}  // namespace

void validate(const QuadratureSpec& q) {
  if (q.n_theta < 8 || q.n_phi < 8) throw ConfigError("quadrature needs at least 8 nodes per direction");
}

SphereRule sphere_rule(const QuadratureSpec& q) {
  validate(q);
  const GaussRule& gl = gauss_legendre(q.n_theta);
  SphereRule r;
  const double dphi = 2.0 * kPi / q.n_phi;
  for (int i = 0; i < q.n_theta; ++i) {
    double theta = std::acos(gl.x[i]);
    for (int k = 0; k < q.n_phi; ++k) {
      r.nodes.push_back({theta, k * dphi});
      r.weights.push_back(gl.w[i] * dphi);
    }
  }
  return r;
}

double QDGrid::weight(std::size_t flat) const {
  double w = 1.0;
  for (std::size_t i = spheres.size(); i-- > 0;) {
    const std::size_t n = spheres[i].weights.size();
    w *= spheres[i].weights[flat % n];
    flat /= n;
  }
  return w;
}

std::vector<SphericalPoint> QDGrid::point(std::size_t flat) const {
  std::vector<SphericalPoint> p(spheres.size());
  for (std::size_t i = spheres.size(); i-- > 0;) {
    const std::size_t n = spheres[i].nodes.size();
    p[i] = spheres[i].nodes[flat % n];
    flat /= n;
  }
  return p;
}

double QDGrid::integral() const {
  CompensatedSum s;
  for (std::size_t f = 0; f < values.size(); ++f) s.add(weight(f) * values[f]);
  return s.value();
}

QDGrid evaluate_grid(QDKind kind, const MultipoleCoeffs& c, const QuadratureSpec& q) {
  const SphereRule rule = sphere_rule(q);
  const std::size_t total = tuple_count(rule.nodes.size(), c.spins.size());
  if (total > q.max_nodes) throw NumericalError("quadrature budget exceeded", static_cast<double>(total));
  QDGrid g;
  g.spheres.assign(c.spins.size(), rule);
  g.values.resize(total);
  QDEvaluator eval(kind, c);
  for (std::size_t f = 0; f < total; ++f) g.values[f] = eval(g.point(f));
  return g;
}

double normalization_residual(QDKind kind, const MultipoleCoeffs& c, const QuadratureSpec& q) {
  const SphereRule rule = sphere_rule(q);
  // Per sphere: quadrature of c(kind) Y_KQ for every (K, Q).
  std::vector<std::vector<cplx>> moments;
  for (HalfInt j : c.spins) {
    std::vector<cplx> m((j.twice() + 1) * (j.twice() + 1), cplx(0.0, 0.0));
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      auto row = harmonic_row(kind, j, rule.nodes[i]);
      for (std::size_t l = 0; l < row.size(); ++l) m[l] += rule.weights[i] * row[l];
    }
    moments.push_back(std::move(m));
  }
  cplx total(0.0, 0.0);
  for (std::size_t f = 0; f < c.values.size(); ++f) {
    if (c.values[f] == cplx(0.0, 0.0)) continue;
    cplx v = c.values[f];
    auto kq = c.unflatten(f);
    for (std::size_t i = 0; i < kq.size(); ++i) v *= moments[i][kq_index(kq[i].K, kq[i].Q)];
    total += v;
  }
  return std::abs(total - cplx(1.0, 0.0));
}

NegativityReport negativity_scan(QDKind kind, const MultipoleCoeffs& c, const QuadratureSpec& q) {
  QDGrid g = evaluate_grid(kind, c, q);
  NegativityReport r;
  r.min_value = std::numeric_limits<double>::infinity();
  CompensatedSum neg, all;
  for (std::size_t f = 0; f < g.values.size(); ++f) {
    const double w = g.weight(f);
    all.add(w);
    if (g.values[f] < -kNegativityEpsilon) neg.add(w);
    if (g.values[f] < r.min_value) {
      r.min_value = g.values[f];
      r.argmin = g.point(f);
    }
  }
  r.negative_fraction = neg.value() / all.value();
  return r;
}

double nonclassical_volume(const MultipoleCoeffs& c, const QuadratureSpec& q) {
  validate(q);
  if (c.spins.empty()) throw DomainError("no particles");
  const std::size_t n = c.spins.size();
  const int twoj_last = c.spins.back().twice();
  const int samples = q.n_theta;

  if (n == 1) {
    std::vector<cplx> a(c.values.size());
    for (std::size_t l = 0; l < a.size(); ++l) {
      KQ kq = kq_from_index(static_cast<int>(l));
      a[l] = c.values[l] * kernel_weight(QDKind::W, c.spins[0], kq.K, kq.Q);
    }
    SphereFunction f(twoj_last, a);
    auto inner = [&](double phi) {
      f.set_phi(phi);
      return abs_theta_integral(f, samples);
    };
    const int panels = std::max(1, q.n_phi / 8);
    const std::size_t budget_guess = static_cast<std::size_t>(panels) * 31 * samples;
    if (budget_guess > q.max_nodes) throw NumericalError("quadrature budget exceeded", static_cast<double>(budget_guess));
    QuadResult res = integrate_adaptive(inner, 0.0, 2.0 * kPi, panels, 1e-7, 1e-12);
    return res.value - 1.0;
  }

  const SphereRule rule = sphere_rule(q);
  const std::size_t outer = tuple_count(rule.nodes.size(), n - 1);
  const std::size_t cost = outer == std::numeric_limits<std::size_t>::max()
                               ? outer
                               : outer * static_cast<std::size_t>(q.n_phi);
  if (outer > q.max_nodes || cost > q.max_nodes)
    throw NumericalError("quadrature budget exceeded", static_cast<double>(cost));

  const double dphi = 2.0 * kPi / q.n_phi;
  std::vector<std::vector<std::vector<cplx>>> rows(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (const auto& node : rule.nodes) rows[i].push_back(harmonic_row(QDKind::W, c.spins[i], node));

  // Kernel weights of the last sphere are folded into its coefficients.
  std::vector<double> last_w;
  for (int K = 0; K <= twoj_last; ++K)
    for (int Q = -K; Q <= K; ++Q) last_w.push_back(kernel_weight(QDKind::W, c.spins.back(), K, Q));

  CompensatedSum total;
  std::vector<std::vector<cplx>> pick(n - 1);
  const std::size_t per = rule.nodes.size();
  for (std::size_t o = 0; o < outer; ++o) {
    std::size_t rest = o;
    double w = 1.0;
    for (std::size_t i = n - 1; i-- > 0;) {
      pick[i] = rows[i][rest % per];
      w *= rule.weights[rest % per];
      rest /= per;
    }
    std::vector<cplx> a = contract_last(c, pick);
    for (std::size_t l = 0; l < a.size(); ++l) a[l] *= last_w[l];
    SphereFunction f(twoj_last, a);
    CompensatedSum ring;
    for (int k = 0; k < q.n_phi; ++k) {
      f.set_phi(k * dphi);
      ring.add(abs_theta_integral(f, samples));
    }
    total.add(w * dphi * ring.value());
  }
  return total.value() - 1.0;
}

nlohmann::json to_json(const NegativityReport& r) {
  nlohmann::json j;
  j["min"] = r.min_value;
  nlohmann::json arg = nlohmann::json::array();
  for (const auto& p : r.argmin) arg.push_back({{"theta", p.theta}, {"phi", p.phi}});
  j["argmin"] = arg;
  j["negative_fraction"] = r.negative_fraction;
  return j;
}

}  // namespace spinqd
