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

#ifndef BIPOTKIT_VECTOR_H_
#define BIPOTKIT_VECTOR_H_

#include <array>
#include <compare>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace bipotkit {

// A point of R^n, 1 <= n <= 3, with finite coordinates. The same type is
// used for primal (x) and dual (y) variables; the duality product is the
// Euclidean inner product.
class Vector {
 public:
  static constexpr int kMaxDimension = 3;

  Vector(std::initializer_list<double> coords);
  explicit Vector(std::span<const double> coords);

  static Vector Zero(int dim);

  int dim() const { return dim_; }
  double operator[](int i) const { return coords_[i]; }
  std::span<const double> coords() const { return {coords_.data(), size_t(dim_)}; }

  bool IsZero() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(double s);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(double s, Vector a) { return a *= s; }
  friend Vector operator*(Vector a, double s) { return a *= s; }
  friend Vector operator-(Vector a) { return a *= -1.0; }

  // Exact coordinate equality, and lexicographic order on (dim, coords).
  friend bool operator==(const Vector& a, const Vector& b);
  friend std::strong_ordering operator<=>(const Vector& a, const Vector& b);

  std::string ToString() const;

 private:
  Vector() = default;
  std::array<double, kMaxDimension> coords_{};
  int dim_ = 0;
};

// Throws DimensionMismatch when a and b differ in dimension.
void CheckSameDimension(const Vector& a, const Vector& b);

double Inner(const Vector& x, const Vector& y);
double SquaredNorm(const Vector& v);
double Norm(const Vector& v);
double Distance(const Vector& a, const Vector& b);
Vector Midpoint(const Vector& a, const Vector& b);
// a + t (b - a)
Vector Lerp(const Vector& a, const Vector& b, double t);

// Cartesian product of `nodes` in dimension `dim`, lexicographic order
// (first coordinate slowest).
std::vector<Vector> ProductGrid(std::span<const double> nodes, int dim);
// `count` equispaced nodes on [lo, hi].
std::vector<double> Linspace(double lo, double hi, int count);

std::ostream& operator<<(std::ostream& os, const Vector& v);

}  // namespace bipotkit

#endif  // BIPOTKIT_VECTOR_H_
