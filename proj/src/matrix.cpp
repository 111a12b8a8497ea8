#include "combclt/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace combclt {

namespace {

class NeumaierAccumulator {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

RealMatrix::RealMatrix(std::size_t n, double fill)
    : n_(n), entries_(n * n, fill) {
  if (n < 2) throw std::invalid_argument("RealMatrix requires n >= 2");
}

RealMatrix::RealMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n < 2) throw std::invalid_argument("RealMatrix requires n >= 2");
  if (entries_.size() != n * n) {
    throw std::invalid_argument("RealMatrix: expected " +
                                std::to_string(n * n) + " entries, got " +
                                std::to_string(entries_.size()));
  }
}

double RealMatrix::row_mean(std::size_t i) const {
  NeumaierAccumulator acc;
  for (std::size_t j = 0; j < n_; ++j) acc.add((*this)(i, j));
  return acc.value() / static_cast<double>(n_);
}

double RealMatrix::col_mean(std::size_t j) const {
  NeumaierAccumulator acc;
  for (std::size_t i = 0; i < n_; ++i) acc.add((*this)(i, j));
  return acc.value() / static_cast<double>(n_);
}

double RealMatrix::grand_mean() const {
  NeumaierAccumulator acc;
  for (double v : entries_) acc.add(v);
  return acc.value() / static_cast<double>(n_ * n_);
}

double RealMatrix::max_abs() const {
  double m = 0.0;
  for (double v : entries_) m = std::max(m, std::fabs(v));
  return m;
}

double compensated_sum(const std::vector<double>& values) {
  NeumaierAccumulator acc;
  for (double v : values) acc.add(v);
  return acc.value();
}

double cell_sum(const RealMatrix& m, const std::function<double(double)>& f) {
  NeumaierAccumulator acc;
  for (double v : m.data()) acc.add(f(v));
  return acc.value();
}

RealMatrix star_transform(const RealMatrix& m) {
  const std::size_t n = m.size();
  std::vector<double> row(n), col(n);
  for (std::size_t i = 0; i < n; ++i) row[i] = m.row_mean(i);
  for (std::size_t j = 0; j < n; ++j) col[j] = m.col_mean(j);
  const double grand = m.grand_mean();
  RealMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = m(i, j) - row[i] - col[j] + grand;
    }
  }
  return out;
}

CenteringCheck check_centering(const RealMatrix& c, double tol) {
  CenteringCheck result;
  for (std::size_t i = 0; i < c.size(); ++i) {
    result.max_violation =
        std::max(result.max_violation, std::fabs(c.row_mean(i)));
  }
  for (std::size_t j = 0; j < c.size(); ++j) {
    result.max_violation =
        std::max(result.max_violation, std::fabs(c.col_mean(j)));
  }
  result.ok = result.max_violation <= tol;
  return result;
}

double default_centering_tol(const RealMatrix& c) {
  return 1e-10 * static_cast<double>(c.size()) * c.max_abs();
}

}  // namespace combclt
