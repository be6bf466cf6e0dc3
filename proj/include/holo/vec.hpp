#pragma once

#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>

namespace holo {

/// Small dense vector in R^d with inline storage (d <= kMaxDim).
class Vec {
 public:
  static constexpr std::size_t kMaxDim = 8;

  Vec() = default;
  explicit Vec(std::size_t dim) : dim_(dim) { assert(dim <= kMaxDim); }
  Vec(std::initializer_list<double> values) : dim_(values.size()) {
    assert(values.size() <= kMaxDim);
    std::size_t i = 0;
    for (double v : values) data_[i++] = v;
  }
  explicit Vec(std::span<const double> values) : dim_(values.size()) {
    assert(values.size() <= kMaxDim);
    for (std::size_t i = 0; i < dim_; ++i) data_[i] = values[i];
  }

  static Vec unit(std::size_t dim, std::size_t axis) {
    Vec e(dim);
    e[axis] = 1.0;
    return e;
  }

  std::size_t dim() const noexcept { return dim_; }
  double& operator[](std::size_t i) { return data_[i]; }
  double operator[](std::size_t i) const { return data_[i]; }
  std::span<const double> values() const noexcept { return {data_.data(), dim_}; }

  Vec& operator+=(const Vec& o) {
    assert(o.dim_ == dim_);
    for (std::size_t i = 0; i < dim_; ++i) data_[i] += o.data_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    assert(o.dim_ == dim_);
    for (std::size_t i = 0; i < dim_; ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Vec& operator*=(double a) {
    for (std::size_t i = 0; i < dim_; ++i) data_[i] *= a;
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(Vec a, double s) { return a *= s; }
  friend Vec operator*(double s, Vec a) { return a *= s; }
  friend Vec operator/(Vec a, double s) { return a *= (1.0 / s); }
  friend Vec operator-(Vec a) { return a *= -1.0; }

  friend bool operator==(const Vec& a, const Vec& b) {
    if (a.dim_ != b.dim_) return false;
    for (std::size_t i = 0; i < a.dim_; ++i)
      if (a.data_[i] != b.data_[i]) return false;
    return true;
  }

 private:
  std::array<double, kMaxDim> data_{};
  std::size_t dim_ = 0;
};

inline double dot(const Vec& a, const Vec& b) {
  assert(a.dim() == b.dim());
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double distance(const Vec& a, const Vec& b) { return norm(a - b); }

}  // namespace holo
