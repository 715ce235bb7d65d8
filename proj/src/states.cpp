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

#include "pst/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pst {

namespace {

void check_index(int n, int a) {
  if (a < 0 || a >= n) {
    throw Error(ErrorCode::BadIndex,
                "vertex " + std::to_string(a) + " outside 0.." + std::to_string(n - 1));
  }
}

}  // namespace

PureState make_vertex_state(int n, int a) {
  check_index(n, a);
  PureState st;
  st.vector = Eigen::VectorXd::Zero(n);
  st.vector(a) = 1.0;
  st.kind = StateKind::Vertex;
  st.a = a;
  st.label = "vertex:" + std::to_string(a);
  return st;
}

PureState make_spair_state(int n, int a, int b, double s) {
  check_index(n, a);
  check_index(n, b);
  if (a == b) {
    throw Error(ErrorCode::BadIndex, "pair endpoints must differ");
  }
  if (s == 0.0 || !std::isfinite(s)) {
    throw Error(ErrorCode::ZeroS, "s must be a nonzero finite real");
  }
  PureState st;
  st.vector = Eigen::VectorXd::Zero(n);
  const double norm = std::sqrt(1.0 + s * s);
  st.vector(a) = 1.0 / norm;
  st.vector(b) = s / norm;
  st.kind = StateKind::SPair;
  st.a = a;
  st.b = b;
  st.s = s;
  std::ostringstream os;
  if (s == -1.0) {
    os << "pair:" << a << "," << b;
  } else if (s == 1.0) {
    os << "plus:" << a << "," << b;
  } else {
    os << "spair:" << a << "," << b << "," << s;
  }
  st.label = os.str();
  return st;
}

PureState make_pair_state(int n, int a, int b) { return make_spair_state(n, a, b, -1.0); }
PureState make_plus_state(int n, int a, int b) { return make_spair_state(n, a, b, 1.0); }

PureState make_general_state(const Eigen::VectorXd& v) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorCode::ZeroVector, "state vector must be nonzero and finite");
  }
  PureState st;
  st.vector = v / norm;
  st.kind = StateKind::General;
  st.label = "general";
  return st;
}

Support support(const Spectrum& spec, const PureState& x, double support_tol) {
  if (x.dim() != spec.dim) {
    throw Error(ErrorCode::DimensionMismatch, "state does not match the spectrum");
  }
  Support sup;
  double total = 0.0;
  for (int j = 0; j < spec.count(); ++j) {
    const double nj = (spec.projectors[j] * x.vector).norm();
    sup.norms.push_back(nj);
    total += nj * nj;
    if (nj > support_tol) sup.indices.push_back(j);
  }
  sup.parseval_error = std::abs(total - 1.0);
  return sup;
}

CospectralityResult strong_cospectrality(const Spectrum& spec, const PureState& x,
                                         const PureState& y, double sc_tol,
                                         double support_tol) {
  if (x.dim() != spec.dim || y.dim() != spec.dim) {
    throw Error(ErrorCode::DimensionMismatch, "states do not match the spectrum");
  }
  const double overlap = std::abs(x.vector.dot(y.vector));
  if (overlap >= 1.0 - 1e-12) {
    throw Error(ErrorCode::LinearlyDependentStates,
                "strong cospectrality needs linearly independent states");
  }

  CospectralityResult res;
  res.signs.assign(spec.count(), 0);

  const Support sx = support(spec, x, support_tol);
  const Support sy = support(spec, y, support_tol);
  if (sx.indices != sy.indices) {
    res.reason = "eigenvalue supports differ";
    return res;
  }
  for (int j : sx.indices) {
    const Eigen::VectorXd fx = spec.projectors[j] * x.vector;
    const Eigen::VectorXd fy = spec.projectors[j] * y.vector;
    const double dplus = (fx - fy).norm();
    const double dminus = (fx + fy).norm();
    const int sign = dplus <= dminus ? 1 : -1;
    if (std::min(dplus, dminus) > sc_tol) {
      std::ostringstream os;
      os << "projector " << j << ": ||F x -+ F y|| = " << std::min(dplus, dminus);
      res.reason = os.str();
      res.signs.assign(spec.count(), 0);
      return res;
    }
    res.signs[j] = sign;
  }
  res.strongly_cospectral = true;
  return res;
}

TransferAmplitude transfer_amplitude(const Spectrum& spec, const PureState& x,
                                     const PureState& y) {
  if (x.dim() != spec.dim || y.dim() != spec.dim) {
    throw Error(ErrorCode::DimensionMismatch, "states do not match the spectrum");
  }
  TransferAmplitude amp;
  for (int j = 0; j < spec.count(); ++j) {
    amp.thetas.push_back(spec.eigenvalues[j]);
    amp.coeffs.push_back(y.vector.dot(spec.projectors[j] * x.vector));
  }
  return amp;
}

std::complex<double> TransferAmplitude::amplitude(double t) const {
  double re = 0.0;
  double im = 0.0;
  for (size_t j = 0; j < thetas.size(); ++j) {
    re += coeffs[j] * std::cos(t * thetas[j]);
    im += coeffs[j] * std::sin(t * thetas[j]);
  }
  return {re, im};
}

double fidelity(const Spectrum& spec, const PureState& x, const PureState& y,
                double t) {
  return transfer_amplitude(spec, x, y).fidelity(t);
}

TransferVerdict verify_transfer(const Spectrum& spec, const PureState& x,
                                const PureState& y, double tau, double pst_tol) {
  TransferVerdict v;
  v.folded_negative_time = tau < 0.0;
  v.time = std::abs(tau);
  const TransferAmplitude amp = transfer_amplitude(spec, x, y);
  const std::complex<double> z = amp.amplitude(v.time);
  v.fidelity = std::norm(z);
  v.achieved = v.fidelity >= 1.0 - pst_tol;
  if (v.achieved && std::abs(z) > 0.0) {
    v.phase = z / std::abs(z);
    v.phase_valid = true;
  }
  if (v.achieved) {
    const double overlap = std::abs(x.vector.dot(y.vector));
    if (overlap < 1.0 - 1e-12) {
      CospectralityResult sc = strong_cospectrality(spec, x, y);
      if (sc.strongly_cospectral) v.sign_pattern = sc.signs;
    }
  }
  return v;
}

namespace {

struct Rational {
  long long p;
  long long q;
};

// Continued-fraction reconstruction of x as p/q with q <= max_den.
std::optional<Rational> rationalize(double x, long long max_den, double tol) {
  double value = x;
  long long h0 = 1, h1 = static_cast<long long>(std::floor(value));
  long long k0 = 0, k1 = 1;
  double frac = value - std::floor(value);
  for (int iter = 0; iter < 64; ++iter) {
    if (std::abs(value - static_cast<double>(h1) / static_cast<double>(k1)) <= tol) {
      return Rational{h1, k1};
    }
    if (frac == 0.0) break;
    double inv = 1.0 / frac;
    double a = std::floor(inv);
    if (a > 4.0e18) break;
    long long ai = static_cast<long long>(a);
    long long h2 = ai * h1 + h0;
    long long k2 = ai * k1 + k0;
    if (k2 > max_den || h2 < 0 || k2 < 0) break;
    h0 = h1; h1 = h2;
    k0 = k1; k1 = k2;
    frac = inv - a;
  }
  if (std::abs(x - static_cast<double>(h1) / static_cast<double>(k1)) <= tol &&
      k1 <= max_den) {
    return Rational{h1, k1};
  }
  return std::nullopt;
}

long long gcd_ll(long long a, long long b) {
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

// Minimal tau > 0 with exp(i tau (theta_j - theta_0)) = eps_j for all j, when
// all gap ratios are rational with small denominators.
std::optional<double> commensurate_time(const std::vector<double>& thetas,
                                        const std::vector<int>& eps,
                                        long long max_den, double rat_tol) {
  const size_t m = thetas.size();
  if (m < 2) return std::nullopt;
  const double base = thetas[1] - thetas[0];
  std::vector<Rational> ratios;
  for (size_t j = 1; j < m; ++j) {
    const double r = (thetas[j] - thetas[0]) / base;
    auto rat = rationalize(r, max_den, rat_tol * std::max(1.0, std::abs(r)));
    if (!rat || rat->p <= 0 || rat->q <= 0) return std::nullopt;
    const long long g = gcd_ll(rat->p, rat->q);
    ratios.push_back(Rational{rat->p / g, rat->q / g});
  }

  long long lcm = 1;
  for (const Rational& r : ratios) {
    const long long g = gcd_ll(lcm, r.q);
    if (lcm / g > 1000000000000LL / r.q) return std::nullopt;  // overflow guard
    lcm = lcm / g * r.q;
  }

  // n_j(s) = s * lcm * p_j / q_j must be an integer of parity beta_j, where
  // beta_j = 0 for eps_j = +1 and 1 for eps_j = -1.  Parities repeat with
  // period two in s, so s = 1 or s = 2 decide.
  for (long long s = 1; s <= 2; ++s) {
    bool ok = true;
    for (size_t j = 1; j < m; ++j) {
      const long long nj = s * (lcm / ratios[j - 1].q) * ratios[j - 1].p;
      const int beta = eps[j] == 1 ? 0 : 1;
      if ((nj % 2 + 2) % 2 != beta) {
        ok = false;
        break;
      }
    }
    if (ok) {
      return M_PI * static_cast<double>(lcm) * static_cast<double>(s) / base;
    }
  }
  return std::nullopt;
}

double golden_section_max(const TransferAmplitude& amp, double lo, double hi,
                          double width) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = amp.fidelity(c);
  double fd = amp.fidelity(d);
  while (b - a > width) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = amp.fidelity(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = amp.fidelity(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::optional<TransferVerdict> find_transfer_time(const Spectrum& spec,
                                                  const PureState& x,
                                                  const PureState& y,
                                                  const SearchConfig& cfg) {
  const double overlap = std::abs(x.vector.dot(y.vector));
  const bool periodic_mode = overlap >= 1.0 - 1e-12;

  std::vector<int> signs;
  if (periodic_mode) {
    signs.assign(spec.count(), 1);
  } else {
    const CospectralityResult sc =
        strong_cospectrality(spec, x, y, cfg.sc_tol, cfg.support_tol);
    if (!sc.strongly_cospectral) return std::nullopt;
    signs = sc.signs;
  }

  const Support sup = support(spec, x, cfg.support_tol);
  std::vector<double> thetas;
  std::vector<int> eps;
  for (int j : sup.indices) {
    thetas.push_back(spec.eigenvalues[j]);
    const int sj = periodic_mode ? 1 : signs[j];
    eps.push_back(sj);
  }
  if (thetas.size() == 1) {
    // Fixed state: periodic at every time, no transfer to anything else.
    if (!periodic_mode) return std::nullopt;
    TransferVerdict v = verify_transfer(spec, x, y, 1.0, cfg.pst_tol);
    return v;
  }
  // Relative phases against the first support eigenvalue.
  std::vector<int> rel(eps.size());
  for (size_t j = 0; j < eps.size(); ++j) rel[j] = eps[0] * eps[j];

  if (auto tau = commensurate_time(thetas, rel, cfg.max_denominator, cfg.rat_tol)) {
    TransferVerdict v = verify_transfer(spec, x, y, *tau, cfg.pst_tol);
    if (v.achieved) return v;
  }

  // Grid fallback with golden-section refinement.
  const TransferAmplitude amp = transfer_amplitude(spec, x, y);
  const double dt = cfg.t_max / static_cast<double>(cfg.points - 1);
  const ScanExtrema ext = scan_extrema_parallel(amp, false, dt, dt, cfg.points - 1);
  const double t_star = dt + static_cast<double>(ext.max_index) * dt;
  const double lo = std::max(dt * 1e-6, t_star - dt);
  const double hi = t_star + dt;
  const double refined = golden_section_max(amp, lo, hi, cfg.refine_width);
  TransferVerdict best = verify_transfer(spec, x, y, refined, cfg.pst_tol);
  return best;
}

namespace {

inline double scan_value(const TransferAmplitude& amp, bool modulus_only, double t) {
  const std::complex<double> z = amp.amplitude(t);
  return modulus_only ? std::abs(z) : std::norm(z);
}

}  // namespace

ScanExtrema scan_extrema_serial(const TransferAmplitude& amp, bool modulus_only,
                                double t0, double dt, long count) {
  ScanExtrema ext;
  ext.max_value = -1.0;
  ext.min_value = std::numeric_limits<double>::infinity();
  for (long i = 0; i < count; ++i) {
    const double v = scan_value(amp, modulus_only, t0 + static_cast<double>(i) * dt);
    if (v > ext.max_value) {
      ext.max_value = v;
      ext.max_index = i;
    }
    if (v < ext.min_value) {
      ext.min_value = v;
      ext.min_index = i;
    }
  }
  return ext;
}

ScanExtrema scan_extrema_parallel(const TransferAmplitude& amp, bool modulus_only,
                                  double t0, double dt, long count) {
#ifndef _OPENMP
  return scan_extrema_serial(amp, modulus_only, t0, dt, count);
#else
  const int threads = omp_get_max_threads();
  const long chunk = std::max<long>(1, (count + threads - 1) / threads);
  const int nchunks = static_cast<int>((count + chunk - 1) / chunk);
  std::vector<ScanExtrema> partial(nchunks);

#pragma omp parallel for schedule(static)
  for (int c = 0; c < nchunks; ++c) {
    const long begin = static_cast<long>(c) * chunk;
    const long end = std::min(count, begin + chunk);
    ScanExtrema local;
    local.max_value = -1.0;
    local.min_value = std::numeric_limits<double>::infinity();
    for (long i = begin; i < end; ++i) {
      const double v = scan_value(amp, modulus_only, t0 + static_cast<double>(i) * dt);
      if (v > local.max_value) {
        local.max_value = v;
        local.max_index = i;
      }
      if (v < local.min_value) {
        local.min_value = v;
        local.min_index = i;
      }
    }
    partial[c] = local;
  }

  // Chunk-ordered merge; strict comparisons keep the first attaining index,
  // so the result matches the serial scan exactly.
  ScanExtrema ext;
  ext.max_value = -1.0;
  ext.min_value = std::numeric_limits<double>::infinity();
  for (const ScanExtrema& local : partial) {
    if (local.max_value > ext.max_value) {
      ext.max_value = local.max_value;
      ext.max_index = local.max_index;
    }
    if (local.min_value < ext.min_value) {
      ext.min_value = local.min_value;
      ext.min_index = local.min_index;
    }
  }
  return ext;
#endif
}

ScanReport scan_evidence(const Spectrum& spec, const PureState& x,
                         const PureState* y, const GridConfig& grid, bool parallel) {
  if (!(grid.t_max > 0.0) || grid.points < 2) {
    throw Error(ErrorCode::BadGrid, "need t_max > 0 and at least two grid points");
  }
  const bool self_scan = y == nullptr;
  const TransferAmplitude amp =
      self_scan ? transfer_amplitude(spec, x, x) : transfer_amplitude(spec, x, *y);

  const double dt = grid.t_max / static_cast<double>(grid.points - 1);
  const long count = grid.points - 1;  // t_i = i*dt for i = 1..points-1
  const ScanExtrema ext = parallel
                              ? scan_extrema_parallel(amp, self_scan, dt, dt, count)
                              : scan_extrema_serial(amp, self_scan, dt, dt, count);

  ScanReport report;
  report.self_scan = self_scan;
  report.sup = ext.max_value;
  report.inf = ext.min_value;
  report.argmax = dt + static_cast<double>(ext.max_index) * dt;
  report.argmin = dt + static_cast<double>(ext.min_index) * dt;
  report.t_max = grid.t_max;
  report.points = grid.points;
  report.evidence_only = true;
  report.suggests_pgst = !self_scan && report.sup >= 0.999;
  return report;
}

std::string TransferVerdict::to_json_text() const {
  nlohmann::json doc;
  doc["schema"] = 1;
  doc["fidelity"] = fidelity;
  doc["time"] = time;
  if (phase_valid) {
    doc["phase_re"] = phase.real();
    doc["phase_im"] = phase.imag();
  } else {
    doc["phase_re"] = nullptr;
    doc["phase_im"] = nullptr;
  }
  doc["achieved"] = achieved;
  doc["evidence_only"] = false;
  doc["folded_negative_time"] = folded_negative_time;
  if (!sign_pattern.empty()) doc["sign_pattern"] = sign_pattern;
  return doc.dump();
}

std::string ScanReport::to_json_text() const {
  nlohmann::json doc;
  doc["schema"] = 1;
  doc["fidelity"] = sup;
  doc["time"] = argmax;
  doc["phase_re"] = nullptr;
  doc["phase_im"] = nullptr;
  doc["achieved"] = false;
  doc["evidence_only"] = true;
  doc["self"] = self_scan;
  doc["sup"] = sup;
  doc["inf"] = inf;
  doc["argmax"] = argmax;
  doc["argmin"] = argmin;
  doc["t_max"] = t_max;
  doc["points"] = points;
  doc["suggests_pgst"] = suggests_pgst;
  return doc.dump();
}

}  // namespace pst
