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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pst/errors.hpp"

namespace pst {

inline constexpr double kDefaultClusterTol = 1e-8;

// Spectral decomposition of a real symmetric matrix into distinct eigenvalues
// theta_1 < ... < theta_d with orthogonal projectors F_j.  Numerically equal
// eigenvalues (gap below cluster_tol * (1 + spectral radius)) share a
// projector.
struct Spectrum {
  int dim = 0;
  std::vector<double> eigenvalues;           // distinct, ascending
  std::vector<int> multiplicities;
  std::vector<Eigen::MatrixXd> projectors;
  double cluster_tol = kDefaultClusterTol;

  int count() const { return static_cast<int>(eigenvalues.size()); }
  double spectral_radius() const;

  // Invariant diagnostics (max-norm errors).
  double completeness_error() const;                       // ||sum F - I||
  double orthogonality_error() const;                      // ||F_j F_k - d_jk F_j||
  double trace_error() const;                              // max |tr F_j - m_j|
  double reconstruction_error(const Eigen::MatrixXd& m) const;
};

Spectrum decompose(const Eigen::MatrixXd& m, double cluster_tol = kDefaultClusterTol);

// U(t) = exp(i t M) = sum_j exp(i t theta_j) F_j.
struct TransitionMatrix {
  double time = 0.0;
  Eigen::MatrixXcd entries;

  double unitarity_error() const;   // ||U U* - I||max
  double symmetry_error() const;    // ||U - U^T||max
};

TransitionMatrix transition(const Spectrum& spec, double t);

// Rank-one interlacing check: with C = rho * w w^T (rho >= 0) and gamma the
// eigenvalues of B + C, verifies gamma_1 >= alpha_1 >= gamma_2 >= ... >=
// alpha_{n-1} >= gamma_n >= alpha_n (descending order) within
// 1e-8 * (1 + ||B + C||).
struct InterlacingReport {
  bool ok = false;
  double tolerance = 0.0;
  std::vector<std::string> violations;
};

InterlacingReport interlacing_verify(const Eigen::MatrixXd& b, double rho,
                                     const Eigen::VectorXd& w);

// True iff the eigenvalue multiset of `whole` equals the multiset union of
// `part_a` and `part_b` after sorted matching within tol.
bool spectrum_union_equal(const Spectrum& whole, const Spectrum& part_a,
                          const Spectrum& part_b, double tol);

// Multiset of eigenvalues expanded by multiplicity, ascending.
std::vector<double> expanded_eigenvalues(const Spectrum& spec);

}  // namespace pst
