#pragma once

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptconf {

/// Vertex-indexed vector of nonnegative integers. Also used as the exponent
/// of a monomial x^d in the graded series ring.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::size_t n, int fill = 0) : v_(n, fill) {}
  DimVector(std::initializer_list<int> xs) : v_(xs) {}
  explicit DimVector(std::vector<int> xs) : v_(std::move(xs)) {}

  std::size_t size() const { return v_.size(); }
  int operator[](std::size_t i) const { return v_[i]; }
  int& operator[](std::size_t i) { return v_[i]; }
  const std::vector<int>& entries() const { return v_; }

  long total() const { return std::accumulate(v_.begin(), v_.end(), 0L); }
  bool is_zero() const {
    for (int x : v_)
      if (x != 0) return false;
    return true;
  }

  /// Componentwise <=.
  bool fits_in(const DimVector& bound) const {
    check_size(bound);
    for (std::size_t i = 0; i < v_.size(); ++i)
      if (v_[i] > bound.v_[i]) return false;
    return true;
  }

  DimVector& operator+=(const DimVector& o) {
    check_size(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  DimVector& operator-=(const DimVector& o) {
    check_size(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
  }
  friend DimVector operator+(DimVector a, const DimVector& b) { return a += b; }
  friend DimVector operator-(DimVector a, const DimVector& b) { return a -= b; }
  friend DimVector operator*(int k, DimVector a) {
    for (int& x : a.v_) x *= k;
    return a;
  }

  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend auto operator<=>(const DimVector&, const DimVector&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v_[i]);
    }
    return s + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const DimVector& d) { return os << d.to_string(); }

 private:
  void check_size(const DimVector& o) const {
    if (o.v_.size() != v_.size()) throw std::invalid_argument("DimVector size mismatch");
  }
  std::vector<int> v_;
};

/// Calls f(e) for every e with 0 < e <= bound, each exactly once, in
/// lexicographic order of the entries.
template <class F>
void for_each_sub_dimvector(const DimVector& bound, F&& f) {
  DimVector e(bound.size(), 0);
  for (int x : bound.entries())
    if (x < 0) throw std::invalid_argument("negative dimension vector");
  while (true) {
    std::size_t i = bound.size();
    while (i > 0) {
      --i;
      if (e[i] < bound[i]) {
        ++e[i];
        for (std::size_t j = i + 1; j < bound.size(); ++j) e[j] = 0;
        break;
      }
      if (i == 0) return;
    }
    if (bound.size() == 0) return;
    f(static_cast<const DimVector&>(e));
  }
}

inline std::vector<DimVector> sub_dimvectors(const DimVector& bound) {
  std::vector<DimVector> out;
  for_each_sub_dimvector(bound, [&](const DimVector& e) { out.push_back(e); });
  return out;
}

}  // namespace ptconf
