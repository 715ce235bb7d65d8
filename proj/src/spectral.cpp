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

#include "pst/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pst {

double Spectrum::spectral_radius() const {
  double r = 0.0;
  for (double t : eigenvalues) r = std::max(r, std::abs(t));
  return r;
}

double Spectrum::completeness_error() const {
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& f : projectors) sum += f;
  return (sum - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

double Spectrum::orthogonality_error() const {
  double worst = 0.0;
  for (size_t j = 0; j < projectors.size(); ++j) {
    for (size_t k = 0; k < projectors.size(); ++k) {
      Eigen::MatrixXd prod = projectors[j] * projectors[k];
      if (j == k) prod -= projectors[j];
      worst = std::max(worst, prod.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

double Spectrum::trace_error() const {
  double worst = 0.0;
  for (size_t j = 0; j < projectors.size(); ++j) {
    worst = std::max(worst, std::abs(projectors[j].trace() - multiplicities[j]));
  }
  return worst;
}

double Spectrum::reconstruction_error(const Eigen::MatrixXd& m) const {
  Eigen::MatrixXd rec = Eigen::MatrixXd::Zero(dim, dim);
  for (size_t j = 0; j < projectors.size(); ++j) rec += eigenvalues[j] * projectors[j];
  return (rec - m).cwiseAbs().maxCoeff();
}

Spectrum decompose(const Eigen::MatrixXd& m, double cluster_tol) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::NotSymmetric, "matrix is not square");
  }
  const double scale = 1.0 + m.cwiseAbs().maxCoeff();
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric");
  }
  if (!(cluster_tol > 0.0)) {
    throw Error(ErrorCode::BadParameters, "cluster_tol must be positive");
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::EigensolveFailure, "eigensolve did not converge");
  }
  const Eigen::VectorXd vals = solver.eigenvalues();
  const Eigen::MatrixXd vecs = solver.eigenvectors();
  const int n = static_cast<int>(m.rows());

  double radius = 0.0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(vals(i)));
  const double merge_gap = cluster_tol * (1.0 + radius);

  Spectrum spec;
  spec.dim = n;
  spec.cluster_tol = cluster_tol;
  int start = 0;
  while (start < n) {
    int end = start + 1;
    while (end < n && vals(end) - vals(end - 1) < merge_gap) ++end;
    const int mult = end - start;
    Eigen::MatrixXd block = vecs.middleCols(start, mult);
    Eigen::MatrixXd proj = block * block.transpose();
    proj = 0.5 * (proj + proj.transpose().eval());  // kill roundoff asymmetry
    double theta = vals.segment(start, mult).mean();
    spec.eigenvalues.push_back(theta);
    spec.multiplicities.push_back(mult);
    spec.projectors.push_back(std::move(proj));
    start = end;
  }
  return spec;
}

TransitionMatrix transition(const Spectrum& spec, double t) {
  TransitionMatrix u;
  u.time = t;
  u.entries = Eigen::MatrixXcd::Zero(spec.dim, spec.dim);
  for (int j = 0; j < spec.count(); ++j) {
    u.entries += std::exp(std::complex<double>(0.0, t * spec.eigenvalues[j])) *
                 spec.projectors[j];
  }
  return u;
}

double TransitionMatrix::unitarity_error() const {
  Eigen::MatrixXcd prod = entries * entries.adjoint();
  prod -= Eigen::MatrixXcd::Identity(entries.rows(), entries.cols());
  return prod.cwiseAbs().maxCoeff();
}

double TransitionMatrix::symmetry_error() const {
  return (entries - entries.transpose()).cwiseAbs().maxCoeff();
}

InterlacingReport interlacing_verify(const Eigen::MatrixXd& b, double rho,
                                     const Eigen::VectorXd& w) {
  if (rho < 0.0) {
    throw Error(ErrorCode::NegativeRho, "rank-one factor must have rho >= 0");
  }
  if (w.size() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "w does not match B");
  }
  Eigen::MatrixXd perturbed = b + rho * (w * w.transpose());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sb(b);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sc(perturbed);
  if (sb.info() != Eigen::Success || sc.info() != Eigen::Success) {
    throw Error(ErrorCode::EigensolveFailure, "eigensolve did not converge");
  }

  const int n = static_cast<int>(b.rows());
  std::vector<double> alpha(n), gamma(n);
  for (int i = 0; i < n; ++i) {
    alpha[i] = sb.eigenvalues()(n - 1 - i);   // descending
    gamma[i] = sc.eigenvalues()(n - 1 - i);
  }

  InterlacingReport report;
  report.tolerance = 1e-8 * (1.0 + perturbed.cwiseAbs().maxCoeff());
  auto check = [&](double lhs, double rhs, const std::string& what) {
    if (lhs < rhs - report.tolerance) {
      std::ostringstream os;
      os << what << " violated: " << lhs << " < " << rhs;
      report.violations.push_back(os.str());
    }
  };
  for (int i = 0; i < n; ++i) {
    check(gamma[i], alpha[i], "gamma_" + std::to_string(i + 1) + " >= alpha_" +
                                  std::to_string(i + 1));
    if (i + 1 < n) {
      check(alpha[i], gamma[i + 1], "alpha_" + std::to_string(i + 1) +
                                        " >= gamma_" + std::to_string(i + 2));
    }
  }
  report.ok = report.violations.empty();
  return report;
}

std::vector<double> expanded_eigenvalues(const Spectrum& spec) {
  std::vector<double> out;
  out.reserve(spec.dim);
  for (int j = 0; j < spec.count(); ++j) {
    for (int k = 0; k < spec.multiplicities[j]; ++k) out.push_back(spec.eigenvalues[j]);
  }
  return out;
}

bool spectrum_union_equal(const Spectrum& whole, const Spectrum& part_a,
                          const Spectrum& part_b, double tol) {
  if (whole.dim != part_a.dim + part_b.dim) {
    throw Error(ErrorCode::DimensionMismatch,
                "parts must partition the whole dimension");
  }
  std::vector<double> lhs = expanded_eigenvalues(whole);
  std::vector<double> rhs = expanded_eigenvalues(part_a);
  std::vector<double> rb = expanded_eigenvalues(part_b);
  rhs.insert(rhs.end(), rb.begin(), rb.end());
  std::sort(rhs.begin(), rhs.end());
  for (size_t i = 0; i < lhs.size(); ++i) {
    if (std::abs(lhs[i] - rhs[i]) > tol) return false;
  }
  return true;
}

}  // namespace pst
