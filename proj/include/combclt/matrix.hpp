#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace combclt {

// Square n x n matrix of reals, n >= 2. Row-major storage; all aggregate
// sums run in row-major order with Neumaier compensation so results do not
// depend on how cells were produced.
class RealMatrix {
 public:
  explicit RealMatrix(std::size_t n, double fill = 0.0);
  RealMatrix(std::size_t n, std::vector<double> entries);

  std::size_t size() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return entries_[i * n_ + j];
  }

  const std::vector<double>& data() const { return entries_; }

  double row_mean(std::size_t i) const;
  double col_mean(std::size_t j) const;
  double grand_mean() const;
  double max_abs() const;

 private:
  std::size_t n_;
  std::vector<double> entries_;
};

// Compensated (Neumaier) summation over a range of doubles.
double compensated_sum(const std::vector<double>& values);

// Row-major compensated sum of f(m_ij) over all cells.
double cell_sum(const RealMatrix& m,
                const std::function<double(double)>& f);

// Double centering: m*_ij = m_ij - m_i. - m_.j + m.. ; annihilates any
// additive row/column structure.
RealMatrix star_transform(const RealMatrix& m);

struct CenteringCheck {
  bool ok = false;
  double max_violation = 0.0;  // largest |row mean| or |column mean|
};

// True iff every row mean and column mean of c is within tol of zero.
CenteringCheck check_centering(const RealMatrix& c, double tol);

// Default tolerance used by bound evaluators that require exact centering.
double default_centering_tol(const RealMatrix& c);

}  // namespace combclt
