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

#include "spinqd/multipole.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "spinqd/angular.hpp"
#include "spinqd/error.hpp"

namespace spinqd {
namespace {

const CMatrix& cached_operator(HalfInt j, int K, int Q) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, CMatrix> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(j.twice(), K, Q);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, multipole_operator(j, K, Q)).first;
  return it->second;
}

// Kronecker product of T_{KQ}^dagger over particles.
CMatrix tensor_operator(const std::vector<HalfInt>& spins, const std::vector<KQ>& kq, bool adjoint) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (std::size_t i = 0; i < spins.size(); ++i) {
    const CMatrix& t = cached_operator(spins[i], kq[i].K, kq[i].Q);
    out = kron(out, adjoint ? CMatrix(t.adjoint()) : t);
  }
  return out;
}

}  // namespace

KQ kq_from_index(int l) {
  int K = static_cast<int>(std::floor(std::sqrt(static_cast<double>(l))));
  while (K * K > l) --K;
  while ((K + 1) * (K + 1) <= l) ++K;
  return {K, l - K * K - K};
}

CMatrix multipole_operator(HalfInt j, int K, int Q) {
  if (j.twice() < 0) throw DomainError("negative spin");
  if (K < 0 || K > j.twice() || std::abs(Q) > K) throw DomainError("multipole index out of range");
  const int n = j.twice() + 1;
  CMatrix t = CMatrix::Zero(n, n);
  const HalfInt bigK(K), bigQ(Q);
  const double norm = std::sqrt(2.0 * K + 1.0);
  for (int r = 0; r < n; ++r) {
    HalfInt m = HalfInt::from_twice(j.twice() - 2 * r);
    for (int c = 0; c < n; ++c) {
      HalfInt mp = HalfInt::from_twice(j.twice() - 2 * c);
      if ((m - mp - bigQ).twice() != 0) continue;
      int phase = ((j - m).twice() / 2) % 2 == 0 ? 1 : -1;
      t(r, c) = phase * norm * wigner_3j(j, bigK, j, -m, bigQ, mp);
    }
  }
  return t;
}

std::vector<int> MultipoleCoeffs::extents() const {
  std::vector<int> e;
  for (HalfInt j : spins) e.push_back((j.twice() + 1) * (j.twice() + 1));
  return e;
}

namespace {

std::size_t flatten(const std::vector<HalfInt>& spins, const std::vector<KQ>& kq) {
  if (kq.size() != spins.size()) throw DomainError("index tuple length does not match particle count");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < spins.size(); ++i) {
    int ext = (spins[i].twice() + 1) * (spins[i].twice() + 1);
    if (kq[i].K < 0 || kq[i].K > spins[i].twice() || std::abs(kq[i].Q) > kq[i].K)
      throw DomainError("multipole index out of range");
    flat = flat * ext + kq_index(kq[i].K, kq[i].Q);
  }
  return flat;
}

}  // namespace

cplx MultipoleCoeffs::at(const std::vector<KQ>& kq) const { return values.at(flatten(spins, kq)); }

cplx& MultipoleCoeffs::at(const std::vector<KQ>& kq) { return values.at(flatten(spins, kq)); }

std::vector<KQ> MultipoleCoeffs::unflatten(std::size_t flat) const {
  std::vector<KQ> kq(spins.size());
  for (std::size_t i = spins.size(); i-- > 0;) {
    int ext = (spins[i].twice() + 1) * (spins[i].twice() + 1);
    kq[i] = kq_from_index(static_cast<int>(flat % ext));
    flat /= ext;
  }
  return kq;
}

MultipoleCoeffs decompose(const DensityMatrix& rho) {
  MultipoleCoeffs c;
  c.spins = rho.spins;
  std::size_t total = 1;
  for (int e : c.extents()) total *= e;
  c.values.assign(total, cplx(0.0, 0.0));
  for (std::size_t f = 0; f < total; ++f) {
    CMatrix op = tensor_operator(c.spins, c.unflatten(f), true);
    // Tr(rho op) without forming the product.
    c.values[f] = (rho.data.transpose().cwiseProduct(op)).sum();
  }
  return c;
}

DensityMatrix reconstruct(const MultipoleCoeffs& c) {
  std::size_t total = 1;
  for (int e : c.extents()) total *= e;
  if (c.values.size() != total) throw DomainError("coefficient table has the wrong size");
  for (std::size_t f = 0; f < total; ++f) {
    std::vector<KQ> kq = c.unflatten(f);
    int qsum = 0;
    for (KQ& k : kq) {
      qsum += k.Q;
      k.Q = -k.Q;
    }
    cplx partner = (qsum % 2 ? -1.0 : 1.0) * std::conj(c.at(kq));
    if (std::abs(c.values[f] - partner) > 1e-10) throw DomainError("coefficients violate the conjugation symmetry");
  }
  const int n = total_dim(c.spins);
  CMatrix rho = CMatrix::Zero(n, n);
  for (std::size_t f = 0; f < c.values.size(); ++f) {
    if (c.values[f] == cplx(0.0, 0.0)) continue;
    rho += c.values[f] * tensor_operator(c.spins, c.unflatten(f), false);
  }
  return DensityMatrix(c.spins, rho);
}

}  // namespace spinqd
