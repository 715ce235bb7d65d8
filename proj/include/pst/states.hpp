// Copyright 2026 The pstwalk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pst/spectral.hpp"

namespace pst {

// Tolerance ladder shared by the state-transfer machinery.
inline constexpr double kSupportTol = 1e-8;   // ||F_j x|| threshold
inline constexpr double kCospectralTol = 1e-8;
inline constexpr double kPstTol = 1e-9;       // fidelity deficit
inline constexpr double kRatTol = 1e-9;       // rational reconstruction
inline constexpr int kMaxDenominator = 1000;

enum class StateKind { Vertex, SPair, General };

// Real unit vector; a vertex state e_a, an s-pair state
// (e_a + s e_b)/sqrt(1+s^2), or a general normalized vector.
struct PureState {
  Eigen::VectorXd vector;
  StateKind kind = StateKind::General;
  int a = -1;
  int b = -1;
  double s = 0.0;
  std::string label;

  int dim() const { return static_cast<int>(vector.size()); }
};

PureState make_vertex_state(int n, int a);
PureState make_spair_state(int n, int a, int b, double s);
PureState make_pair_state(int n, int a, int b);   // s = -1
PureState make_plus_state(int n, int a, int b);   // s = +1
PureState make_general_state(const Eigen::VectorXd& v);

// Eigenvalue support of a state: indices j with ||F_j x|| > support_tol.
struct Support {
  std::vector<int> indices;
  std::vector<double> norms;      // per distinct eigenvalue, size spec.count()
  double parseval_error = 0.0;    // |sum ||F_j x||^2 - 1|

  bool is_fixed() const { return indices.size() == 1; }
};

Support support(const Spectrum& spec, const PureState& x,
                double support_tol = kSupportTol);

// F_j x = sign_j * F_j y for every j in the common support.
struct CospectralityResult {
  bool strongly_cospectral = false;
  std::vector<int> signs;   // size spec.count(); 0 outside the support
  std::string reason;       // why it failed, empty when it holds
};

CospectralityResult strong_cospectrality(const Spectrum& spec, const PureState& x,
                                         const PureState& y,
                                         double sc_tol = kCospectralTol,
                                         double support_tol = kSupportTol);

// |y^T U(t) x|^2 computed from the projector coefficients, without forming U.
double fidelity(const Spectrum& spec, const PureState& x, const PureState& y,
                double t);

// The transfer amplitude y^T U(t) x = sum_j c_j e^{i t theta_j} with real
// coefficients c_j = y^T F_j x.  This is the inner loop of every scan.
struct TransferAmplitude {
  std::vector<double> thetas;
  std::vector<double> coeffs;

  std::complex<double> amplitude(double t) const;
  double fidelity(double t) const { return std::norm(amplitude(t)); }
};

TransferAmplitude transfer_amplitude(const Spectrum& spec, const PureState& x,
                                     const PureState& y);

struct TransferVerdict {
  double fidelity = 0.0;
  double time = 0.0;                       // |input tau|
  bool achieved = false;
  bool phase_valid = false;                // phase defined only when achieved
  std::complex<double> phase{0.0, 0.0};
  bool folded_negative_time = false;
  std::vector<int> sign_pattern;           // strong-cospectrality signs if known

  std::string to_json_text() const;
};

// Checks U(tau) x = gamma y up to a fidelity deficit of pst_tol.  y may equal
// x (periodicity check).  Negative tau is folded to |tau| (fidelity is even
// in t) and flagged.
TransferVerdict verify_transfer(const Spectrum& spec, const PureState& x,
                                const PureState& y, double tau,
                                double pst_tol = kPstTol);

struct SearchConfig {
  int max_denominator = kMaxDenominator;
  double rat_tol = kRatTol;
  double pst_tol = kPstTol;
  double sc_tol = kCospectralTol;
  double support_tol = kSupportTol;
  // phase-2 grid fallback
  double t_max = 200.0;
  long points = 200001;
  double refine_width = 1e-10;
};

// Two-phase search for a transfer time.
// Phase 1: if all support gap ratios are rational with denominator <= D,
// solve the phase-alignment congruences exactly and verify the minimal
// positive candidate.  Phase 2: grid scan over (0, t_max] refined by
// golden-section search.  Returns nullopt iff strong cospectrality fails
// (for x != y); otherwise returns the best verdict found, achieved or not.
std::optional<TransferVerdict> find_transfer_time(const Spectrum& spec,
                                                  const PureState& x,
                                                  const PureState& y,
                                                  const SearchConfig& cfg = {});

struct GridConfig {
  double t_max = 200.0;
  long points = 200001;   // grid t_i = i * t_max/(points-1), i = 1..points-1
};

// Extrema of a uniformly sampled curve.  Serial reference and OpenMP kernel
// must produce identical results (first index wins ties).
struct ScanExtrema {
  double max_value = 0.0;
  double min_value = 0.0;
  long max_index = 0;
  long min_index = 0;
};

ScanExtrema scan_extrema_serial(const TransferAmplitude& amp, bool modulus_only,
                                double t0, double dt, long count);
ScanExtrema scan_extrema_parallel(const TransferAmplitude& amp, bool modulus_only,
                                  double t0, double dt, long count);

// Grid evidence for PGST / sedentariness.  With y present the scanned value
// is the transfer fidelity |y^T U(t) x|^2; without y it is the self-overlap
// modulus |x^T U(t) x|.  Evidence only: a high sup suggests PGST, a positive
// inf is consistent with sedentariness at level C = inf, and any point below
// C refutes sedentariness at that level.
struct ScanReport {
  bool self_scan = false;
  double sup = 0.0;
  double inf = 0.0;
  double argmax = 0.0;
  double argmin = 0.0;
  double t_max = 0.0;
  long points = 0;
  bool evidence_only = true;
  bool suggests_pgst = false;   // sup >= 0.999 on a transfer scan

  std::string to_json_text() const;
};

ScanReport scan_evidence(const Spectrum& spec, const PureState& x,
                         const PureState* y, const GridConfig& grid,
                         bool parallel = true);

}  // namespace pst
