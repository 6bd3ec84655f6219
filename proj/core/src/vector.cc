// Copyright 2026 The bipotkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bipotkit/vector.h"

#include <cmath>
#include <sstream>

#include "bipotkit/error.h"

namespace bipotkit {

Vector::Vector(std::initializer_list<double> coords)
    : Vector(std::span<const double>(coords.begin(), coords.size())) {}

Vector::Vector(std::span<const double> coords) {
  if (coords.empty() || coords.size() > size_t(kMaxDimension)) {
    throw PreconditionError("Vector: dimension must be in [1, 3], got " +
                            std::to_string(coords.size()));
  }
  dim_ = int(coords.size());
  for (int i = 0; i < dim_; ++i) {
    if (!std::isfinite(coords[i])) {
      throw PreconditionError("Vector: non-finite coordinate");
    }
    coords_[i] = coords[i];
  }
}

Vector Vector::Zero(int dim) {
  if (dim < 1 || dim > kMaxDimension) {
    throw PreconditionError("Vector: dimension must be in [1, 3]");
  }
  Vector v;
  v.dim_ = dim;
  return v;
}

bool Vector::IsZero() const {
  for (int i = 0; i < dim_; ++i) {
    if (coords_[i] != 0.0) return false;
  }
  return true;
}

Vector& Vector::operator+=(const Vector& other) {
  CheckSameDimension(*this, other);
  for (int i = 0; i < dim_; ++i) coords_[i] += other.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  CheckSameDimension(*this, other);
  for (int i = 0; i < dim_; ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Vector& Vector::operator*=(double s) {
  for (int i = 0; i < dim_; ++i) coords_[i] *= s;
  return *this;
}

bool operator==(const Vector& a, const Vector& b) {
  if (a.dim_ != b.dim_) return false;
  for (int i = 0; i < a.dim_; ++i) {
    if (a.coords_[i] != b.coords_[i]) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Vector& a, const Vector& b) {
  if (a.dim_ != b.dim_) return a.dim_ <=> b.dim_;
  for (int i = 0; i < a.dim_; ++i) {
    // Coordinates are finite, so the partial order is total here.
    if (a.coords_[i] < b.coords_[i]) return std::strong_ordering::less;
    if (a.coords_[i] > b.coords_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Vector::ToString() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

void CheckSameDimension(const Vector& a, const Vector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("dimension mismatch: " + std::to_string(a.dim()) +
                            " vs " + std::to_string(b.dim()));
  }
}

double Inner(const Vector& x, const Vector& y) {
  CheckSameDimension(x, y);
  double s = 0.0;
  for (int i = 0; i < x.dim(); ++i) s += x[i] * y[i];
  return s;
}

double SquaredNorm(const Vector& v) {
  double s = 0.0;
  for (int i = 0; i < v.dim(); ++i) s += v[i] * v[i];
  return s;
}

double Norm(const Vector& v) {
  switch (v.dim()) {
    case 1:
      return std::abs(v[0]);
    case 2:
      return std::hypot(v[0], v[1]);
    default:
      return std::hypot(v[0], v[1], v[2]);
  }
}

double Distance(const Vector& a, const Vector& b) { return Norm(a - b); }

Vector Midpoint(const Vector& a, const Vector& b) { return 0.5 * (a + b); }

Vector Lerp(const Vector& a, const Vector& b, double t) {
  return a + t * (b - a);
}

std::vector<Vector> ProductGrid(std::span<const double> nodes, int dim) {
  if (dim < 1 || dim > Vector::kMaxDimension) {
    throw PreconditionError("ProductGrid: dimension must be in [1, 3]");
  }
  std::vector<Vector> out;
  const size_t k = nodes.size();
  size_t total = 1;
  for (int d = 0; d < dim; ++d) total *= k;
  out.reserve(total);
  std::array<double, Vector::kMaxDimension> buf{};
  for (size_t idx = 0; idx < total; ++idx) {
    size_t rem = idx;
    for (int d = dim - 1; d >= 0; --d) {
      buf[d] = nodes[rem % k];
      rem /= k;
    }
    out.emplace_back(std::span<const double>(buf.data(), size_t(dim)));
  }
  return out;
}

std::vector<double> Linspace(double lo, double hi, int count) {
  if (count < 1) throw PreconditionError("Linspace: count must be >= 1");
  if (count == 1) return {lo};
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = lo + (hi - lo) * (double(i) / double(count - 1));
  }
  out.back() = hi;
  return out;
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
  os << '(';
  for (int i = 0; i < v.dim(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  return os << ')';
}

}  // namespace bipotkit
