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

#pragma once

#include <string>
#include <vector>

#include "spinqd/qd.hpp"

namespace spinqd {

enum class OracleId { QndQubit, SgadQubit, AdEpr, AdGhz, AdW, Spin1Pure };

std::string to_string(OracleId id);
OracleId oracle_from_string(const std::string& s);

// as_printed keeps known misprints (mirrored azimuth for single-qubit forms,
// GHZ P/Q coherence sign, spin-1 Q coefficient). corrected agrees with the
// multipole evaluation.
enum class Transcription { corrected, as_printed };

struct ClosedFormParams {
  // initial coherent state of the single-qubit forms
  double alpha = 0.0;
  double beta = 0.0;
  // QND
  double omega = 1.0;
  double t = 0.0;
  double gamma_t = 0.0;
  // SGAD / AD
  double lambda = 0.0;
  double mu = 0.0;
  double nu = 0.0;
  double p = 1.0;
  double xi = 0.0;
  // spin-1 amplitudes on m = +1, 0, -1
  cplx a_plus{0.0, 0.0};
  cplx a_zero{0.0, 0.0};
  cplx a_minus{0.0, 0.0};
};

double closed_form(OracleId id, QDKind kind, const ClosedFormParams& params, const std::vector<SphericalPoint>& points,
                   Transcription tr = Transcription::corrected);

}  // namespace spinqd
