#pragma once

// Dense coordinate tensors of rank 0 to 4 over a single chart dimension.
// Storage is row-major with slot 0 slowest.  Each slot carries a variance
// flag; contractions consult the flags so an index can never be traced
// against one of the same kind without the metric being supplied.

#include <cassert>
#include <cstddef>
#include <vector>

namespace papm {

enum class Variance { Lower, Upper };

class DenseTensor {
public:
  DenseTensor() = default;
  DenseTensor(int dim, std::vector<Variance> variance);

  static DenseTensor scalar(int dim, double v);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(variance_.size()); }
  Variance variance(int slot) const;
  const std::vector<Variance>& variances() const { return variance_; }

  std::size_t size() const { return data_.size(); }
  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  double& at() { assert(rank() == 0); return data_[0]; }
  double at() const { assert(rank() == 0); return data_[0]; }
  double& at(int a) { assert(rank() == 1); return data_[idx1(a)]; }
  double at(int a) const { assert(rank() == 1); return data_[idx1(a)]; }
  double& at(int a, int b) { assert(rank() == 2); return data_[idx2(a, b)]; }
  double at(int a, int b) const { assert(rank() == 2); return data_[idx2(a, b)]; }
  double& at(int a, int b, int c) { assert(rank() == 3); return data_[idx3(a, b, c)]; }
  double at(int a, int b, int c) const { assert(rank() == 3); return data_[idx3(a, b, c)]; }
  double& at(int a, int b, int c, int d) { assert(rank() == 4); return data_[idx4(a, b, c, d)]; }
  double at(int a, int b, int c, int d) const { assert(rank() == 4); return data_[idx4(a, b, c, d)]; }

  double max_abs() const;

  DenseTensor& operator+=(const DenseTensor& o);
  DenseTensor& operator-=(const DenseTensor& o);
  DenseTensor& operator*=(double s);

private:
  std::size_t idx1(int a) const { return std::size_t(a); }
  std::size_t idx2(int a, int b) const { return (std::size_t(a) * dim_) + b; }
  std::size_t idx3(int a, int b, int c) const {
    return ((std::size_t(a) * dim_) + b) * dim_ + c;
  }
  std::size_t idx4(int a, int b, int c, int d) const {
    return (((std::size_t(a) * dim_) + b) * dim_ + c) * dim_ + d;
  }

  int dim_ = 0;
  std::vector<Variance> variance_;
  std::vector<double> data_{0.0};
};

DenseTensor operator+(DenseTensor a, const DenseTensor& b);
DenseTensor operator-(DenseTensor a, const DenseTensor& b);
DenseTensor operator*(DenseTensor a, double s);
DenseTensor operator*(double s, DenseTensor a);

// Inverse of a symmetric positive definite rank-2 lower tensor, as an upper
// tensor.  Symmetry is checked first; positive definiteness failures report
// the smallest eigenvalue.
DenseTensor invert_spd(const DenseTensor& g, double symmetry_tol = 1e-9);

// Eigenvalues of a symmetric rank-2 tensor, ascending.
std::vector<double> sym_eigenvalues(const DenseTensor& m);

// Metric together with its inverse.  The input is symmetrized (the average of
// the matrix and its transpose) before inversion, after the symmetry check.
struct MetricPair {
  DenseTensor g;      // lower lower
  DenseTensor g_inv;  // upper upper
  explicit MetricPair(const DenseTensor& g_raw, double symmetry_tol = 1e-9);
  MetricPair() = default;
};

// Contract slots i and j of t.  Opposite variances trace directly; two lower
// slots contract through g_inv and two upper slots through g.  The metric may
// be omitted only in the mixed case.
DenseTensor contract(const DenseTensor& t, int slot_i, int slot_j,
                     const MetricPair* metric = nullptr);

DenseTensor outer(const DenseTensor& a, const DenseTensor& b);

DenseTensor swap_slots(const DenseTensor& t, int slot_i, int slot_j);

// Sum over cyclic permutations of the first three slots:
// out(x,y,z,...) = t(x,y,z,...) + t(y,z,x,...) + t(z,x,y,...).
DenseTensor cyclic_sum_3(const DenseTensor& t);

// Substitute p (a mixed rank-2 map, upper then lower) into one slot of t:
// a lower slot sees its argument replaced by p applied to it, an upper slot
// gets p applied to the output index.
DenseTensor twist_slot(const DenseTensor& t, int slot, const DenseTensor& p);

DenseTensor lower_slot(const DenseTensor& t, int slot, const MetricPair& m);
DenseTensor raise_slot(const DenseTensor& t, int slot, const MetricPair& m);

} // namespace papm
