#include "papm/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <Eigen/Dense>

#include "papm/errors.hpp"

namespace papm {

namespace {

std::size_t pow_size(int dim, int rank) {
  std::size_t s = 1;
  for (int k = 0; k < rank; ++k) s *= std::size_t(dim);
  return s;
}

std::size_t flat(const int* idx, int rank, int dim) {
  std::size_t f = 0;
  for (int k = 0; k < rank; ++k) f = f * std::size_t(dim) + std::size_t(idx[k]);
  return f;
}

// Odometer over rank indices in [0, dim).  Returns false after wrapping, so a
// rank-0 index yields exactly one pass through a do/while loop.
bool next_index(int* idx, int rank, int dim) {
  for (int k = rank - 1; k >= 0; --k) {
    if (++idx[k] < dim) return true;
    idx[k] = 0;
  }
  return false;
}

Eigen::MatrixXd to_eigen(const DenseTensor& m) {
  int n = m.dim();
  Eigen::MatrixXd e(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e(i, j) = m.at(i, j);
  return e;
}

void check_metric_shape(const DenseTensor& g) {
  if (g.rank() != 2 || g.variance(0) != Variance::Lower ||
      g.variance(1) != Variance::Lower)
    throw VarianceMismatch("metric must be a rank-2 tensor with two lower slots");
}

// Shared symmetry gate for the SPD entry points.
void check_symmetry(const Eigen::MatrixXd& e, double tol) {
  double dev = (e - e.transpose()).cwiseAbs().maxCoeff();
  double scale = std::max(1.0, e.cwiseAbs().maxCoeff());
  if (dev > tol * scale) throw AsymmetricMatrix(dev);
}

DenseTensor invert_spd_impl(const DenseTensor& g, double symmetry_tol) {
  check_metric_shape(g);
  int n = g.dim();
  Eigen::MatrixXd e = to_eigen(g);
  check_symmetry(e, symmetry_tol);
  Eigen::MatrixXd sym = 0.5 * (e + e.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
  double min_ev = es.eigenvalues().minCoeff();
  if (min_ev <= 0.0) throw NotPositiveDefinite(min_ev);
  Eigen::MatrixXd inv =
      Eigen::LLT<Eigen::MatrixXd>(sym).solve(Eigen::MatrixXd::Identity(n, n));
  DenseTensor out(n, {Variance::Upper, Variance::Upper});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = 0.5 * (inv(i, j) + inv(j, i));
  return out;
}

} // namespace

DenseTensor::DenseTensor(int dim, std::vector<Variance> variance)
    : dim_(dim), variance_(std::move(variance)) {
  if (static_cast<int>(variance_.size()) > 4)
    throw SlotOutOfRange(static_cast<int>(variance_.size()), 4);
  data_.assign(pow_size(dim_, rank()), 0.0);
}

DenseTensor DenseTensor::scalar(int dim, double v) {
  DenseTensor t(dim, {});
  t.data_[0] = v;
  return t;
}

Variance DenseTensor::variance(int slot) const {
  if (slot < 0 || slot >= rank()) throw SlotOutOfRange(slot, rank());
  return variance_[slot];
}

double DenseTensor::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::fabs(v));
  return m;
}

DenseTensor& DenseTensor::operator+=(const DenseTensor& o) {
  if (o.dim_ != dim_ || o.variance_ != variance_)
    throw VarianceMismatch("tensor addition requires identical shape and variances");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

DenseTensor& DenseTensor::operator-=(const DenseTensor& o) {
  if (o.dim_ != dim_ || o.variance_ != variance_)
    throw VarianceMismatch("tensor subtraction requires identical shape and variances");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

DenseTensor& DenseTensor::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

DenseTensor operator+(DenseTensor a, const DenseTensor& b) { return a += b; }
DenseTensor operator-(DenseTensor a, const DenseTensor& b) { return a -= b; }
DenseTensor operator*(DenseTensor a, double s) { return a *= s; }
DenseTensor operator*(double s, DenseTensor a) { return a *= s; }

DenseTensor invert_spd(const DenseTensor& g, double symmetry_tol) {
  return invert_spd_impl(g, symmetry_tol);
}

std::vector<double> sym_eigenvalues(const DenseTensor& m) {
  check_metric_shape(m);
  Eigen::MatrixXd e = to_eigen(m);
  Eigen::MatrixXd sym = 0.5 * (e + e.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
  std::vector<double> out(m.dim());
  for (int i = 0; i < m.dim(); ++i) out[i] = es.eigenvalues()(i);
  return out;
}

MetricPair::MetricPair(const DenseTensor& g_raw, double symmetry_tol) {
  check_metric_shape(g_raw);
  int n = g_raw.dim();
  Eigen::MatrixXd e = to_eigen(g_raw);
  check_symmetry(e, symmetry_tol);
  g = DenseTensor(n, {Variance::Lower, Variance::Lower});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.at(i, j) = 0.5 * (e(i, j) + e(j, i));
  g_inv = invert_spd_impl(g, symmetry_tol);
}

DenseTensor contract(const DenseTensor& t, int slot_i, int slot_j,
                     const MetricPair* metric) {
  int r = t.rank(), n = t.dim();
  if (slot_i < 0 || slot_i >= r) throw SlotOutOfRange(slot_i, r);
  if (slot_j < 0 || slot_j >= r || slot_j == slot_i) throw SlotOutOfRange(slot_j, r);
  if (slot_i > slot_j) std::swap(slot_i, slot_j);

  Variance vi = t.variance(slot_i);
  const DenseTensor* w = nullptr;
  if (vi == t.variance(slot_j)) {
    if (!metric)
      throw VarianceMismatch(
          "contracting two slots of the same variance requires the metric");
    w = (vi == Variance::Lower) ? &metric->g_inv : &metric->g;
  }

  std::vector<Variance> out_var;
  for (int k = 0; k < r; ++k)
    if (k != slot_i && k != slot_j) out_var.push_back(t.variance(k));
  DenseTensor out(n, out_var);
  int out_rank = r - 2;

  int oidx[4] = {0, 0, 0, 0};
  do {
    int tidx[4] = {0, 0, 0, 0};
    int pos = 0;
    for (int k = 0; k < r; ++k) {
      if (k == slot_i || k == slot_j) continue;
      tidx[k] = oidx[pos++];
    }
    double acc = 0.0;
    if (w) {
      for (int s = 0; s < n; ++s)
        for (int u = 0; u < n; ++u) {
          tidx[slot_i] = s;
          tidx[slot_j] = u;
          acc += w->at(s, u) * t.data()[flat(tidx, r, n)];
        }
    } else {
      for (int s = 0; s < n; ++s) {
        tidx[slot_i] = s;
        tidx[slot_j] = s;
        acc += t.data()[flat(tidx, r, n)];
      }
    }
    out.data()[flat(oidx, out_rank, n)] = acc;
  } while (next_index(oidx, out_rank, n));
  return out;
}

DenseTensor outer(const DenseTensor& a, const DenseTensor& b) {
  if (a.dim() != b.dim())
    throw VarianceMismatch("outer product requires matching dimensions");
  std::vector<Variance> var = a.variances();
  var.insert(var.end(), b.variances().begin(), b.variances().end());
  DenseTensor out(a.dim(), var);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out.data()[i * b.size() + j] = a.data()[i] * b.data()[j];
  return out;
}

DenseTensor swap_slots(const DenseTensor& t, int slot_i, int slot_j) {
  int r = t.rank(), n = t.dim();
  if (slot_i < 0 || slot_i >= r) throw SlotOutOfRange(slot_i, r);
  if (slot_j < 0 || slot_j >= r) throw SlotOutOfRange(slot_j, r);
  std::vector<Variance> var = t.variances();
  std::swap(var[slot_i], var[slot_j]);
  DenseTensor out(n, var);
  int idx[4] = {0, 0, 0, 0};
  do {
    int src[4];
    for (int k = 0; k < r; ++k) src[k] = idx[k];
    std::swap(src[slot_i], src[slot_j]);
    out.data()[flat(idx, r, n)] = t.data()[flat(src, r, n)];
  } while (next_index(idx, r, n));
  return out;
}

DenseTensor cyclic_sum_3(const DenseTensor& t) {
  int r = t.rank(), n = t.dim();
  if (r < 3) throw SlotOutOfRange(2, r);
  if (t.variance(0) != t.variance(1) || t.variance(1) != t.variance(2))
    throw VarianceMismatch("cyclic sum needs equal variance on the first three slots");
  DenseTensor out(n, t.variances());
  int idx[4] = {0, 0, 0, 0};
  do {
    int p1[4], p2[4];
    for (int k = 0; k < r; ++k) p1[k] = p2[k] = idx[k];
    // out(x,y,z,..) = t(x,y,z,..) + t(y,z,x,..) + t(z,x,y,..)
    p1[0] = idx[1]; p1[1] = idx[2]; p1[2] = idx[0];
    p2[0] = idx[2]; p2[1] = idx[0]; p2[2] = idx[1];
    out.data()[flat(idx, r, n)] = t.data()[flat(idx, r, n)] +
                                  t.data()[flat(p1, r, n)] +
                                  t.data()[flat(p2, r, n)];
  } while (next_index(idx, r, n));
  return out;
}

DenseTensor twist_slot(const DenseTensor& t, int slot, const DenseTensor& p) {
  int r = t.rank(), n = t.dim();
  if (slot < 0 || slot >= r) throw SlotOutOfRange(slot, r);
  if (p.rank() != 2 || p.dim() != n || p.variance(0) != Variance::Upper ||
      p.variance(1) != Variance::Lower)
    throw VarianceMismatch("slot substitution needs a mixed rank-2 map");
  bool lower = t.variance(slot) == Variance::Lower;
  DenseTensor out(n, t.variances());
  int idx[4] = {0, 0, 0, 0};
  do {
    int src[4];
    for (int k = 0; k < r; ++k) src[k] = idx[k];
    double acc = 0.0;
    for (int s = 0; s < n; ++s) {
      src[slot] = s;
      double w = lower ? p.at(s, idx[slot]) : p.at(idx[slot], s);
      acc += w * t.data()[flat(src, r, n)];
    }
    out.data()[flat(idx, r, n)] = acc;
  } while (next_index(idx, r, n));
  return out;
}

namespace {

DenseTensor metric_slot(const DenseTensor& t, int slot, const DenseTensor& w,
                        Variance from, Variance to) {
  int r = t.rank(), n = t.dim();
  if (slot < 0 || slot >= r) throw SlotOutOfRange(slot, r);
  if (t.variance(slot) != from)
    throw VarianceMismatch("slot already has the requested variance");
  std::vector<Variance> var = t.variances();
  var[slot] = to;
  DenseTensor out(n, var);
  int idx[4] = {0, 0, 0, 0};
  do {
    int src[4];
    for (int k = 0; k < r; ++k) src[k] = idx[k];
    double acc = 0.0;
    for (int s = 0; s < n; ++s) {
      src[slot] = s;
      acc += w.at(idx[slot], s) * t.data()[flat(src, r, n)];
    }
    out.data()[flat(idx, r, n)] = acc;
  } while (next_index(idx, r, n));
  return out;
}

} // namespace

DenseTensor lower_slot(const DenseTensor& t, int slot, const MetricPair& m) {
  return metric_slot(t, slot, m.g, Variance::Upper, Variance::Lower);
}

DenseTensor raise_slot(const DenseTensor& t, int slot, const MetricPair& m) {
  return metric_slot(t, slot, m.g_inv, Variance::Lower, Variance::Upper);
}

} // namespace papm
