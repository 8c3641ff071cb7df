#include "support/numeric_oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>

#include "hvn/errors.hpp"

namespace hvn::testutil {

namespace {

using Matrix = Eigen::MatrixXcd;

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

// P_i over an arbitrary unitary representation given as one matrix per
// group element.
Matrix isotypic_projection(const CharacterTable& t, int i, const std::vector<Matrix>& rep) {
  const int n = t.group->order;
  const int dim = static_cast<int>(rep[0].rows());
  Matrix p = Matrix::Zero(dim, dim);
  for (int g = 0; g < n; ++g) {
    const std::complex<double> chi = t.rows[i].values[t.class_of[g]].to_complex();
    p += std::conj(chi) * rep[g];
  }
  return (static_cast<double>(t.degrees[i]) / n) * p;
}

std::vector<Matrix> permutation_matrices(int points, const std::vector<Perm>& action) {
  std::vector<Matrix> rep;
  rep.reserve(action.size());
  for (const Perm& p : action) {
    Matrix m = Matrix::Zero(points, points);
    for (int x = 0; x < points; ++x) m(p[x], x) = 1.0;
    rep.push_back(std::move(m));
  }
  return rep;
}

// Left translation h -> gh as a permutation action of G on itself.
std::vector<Matrix> regular_matrices(const FiniteGroup& g) {
  std::vector<Perm> action(g.order);
  for (int a = 0; a < g.order; ++a) {
    action[a].resize(g.order);
    for (int h = 0; h < g.order; ++h) action[a][h] = g.mul(a, h);
  }
  return permutation_matrices(g.order, action);
}

}  // namespace

double ProjectionReport::max_error() const {
  return std::max({idempotent_error, orthogonality_error, trace_error, completeness_error});
}

ProjectionReport regular_projection_check(const CharacterTable& t) {
  const int n = t.group->order;
  const std::vector<Matrix> rep = regular_matrices(*t.group);
  std::vector<Matrix> proj;
  proj.reserve(t.rows.size());
  for (int i = 0; i < t.num_irreps(); ++i) proj.push_back(isotypic_projection(t, i, rep));

  ProjectionReport r;
  Matrix total = Matrix::Zero(n, n);
  for (int i = 0; i < t.num_irreps(); ++i) {
    r.idempotent_error = std::max(r.idempotent_error, max_abs(proj[i] * proj[i] - proj[i]));
    const double want = static_cast<double>(t.degrees[i]) * t.degrees[i];
    r.trace_error = std::max(r.trace_error, std::abs(proj[i].trace() - want));
    for (int j = i + 1; j < t.num_irreps(); ++j)
      r.orthogonality_error = std::max(r.orthogonality_error, max_abs(proj[i] * proj[j]));
    total += proj[i];
  }
  r.completeness_error = max_abs(total - Matrix::Identity(n, n));
  return r;
}

std::vector<int> numeric_point_spectrum(const CharacterTable& t, const TopSystem& s,
                                        double tol) {
  const std::vector<Matrix> rep = permutation_matrices(s.points, s.action);
  std::vector<int> mult;
  mult.reserve(t.rows.size());
  for (int i = 0; i < t.num_irreps(); ++i) {
    const std::complex<double> tr = isotypic_projection(t, i, rep).trace();
    require_internal(std::abs(tr.imag()) < tol, "projection trace drifted off the real line");
    const double ratio = tr.real() / t.degrees[i];
    const double rounded = std::round(ratio);
    require_internal(std::abs(ratio - rounded) < tol, "projection trace is not an integer multiple");
    mult.push_back(static_cast<int>(rounded));
  }
  return mult;
}

}  // namespace hvn::testutil
