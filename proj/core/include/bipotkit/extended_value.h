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

#ifndef BIPOTKIT_EXTENDED_VALUE_H_
#define BIPOTKIT_EXTENDED_VALUE_H_

#include <compare>
#include <limits>
#include <ostream>
#include <string>

namespace bipotkit {

// A value of R u {+inf}. -inf and NaN are not representable; any operation
// that would produce them throws PreconditionError.
class ExtendedValue {
 public:
  constexpr ExtendedValue() = default;
  // Accepts any finite double or +inf.
  ExtendedValue(double v);  // NOLINT(google-explicit-constructor)

  static constexpr ExtendedValue Infinity() {
    return ExtendedValue(std::numeric_limits<double>::infinity(), Raw{});
  }

  bool is_finite() const { return value_ != kInf; }
  bool is_infinite() const { return value_ == kInf; }

  // Throws PreconditionError on +inf.
  double value() const;
  // +inf maps to std::numeric_limits<double>::infinity().
  double ToDouble() const { return value_; }

  ExtendedValue& operator+=(ExtendedValue other);
  friend ExtendedValue operator+(ExtendedValue a, ExtendedValue b) {
    return a += b;
  }
  // inf - finite = inf; anything - inf is an error.
  friend ExtendedValue operator-(ExtendedValue a, ExtendedValue b);

  // Scaling by a nonnegative factor, with 0 * inf = 0.
  friend ExtendedValue Scale(double factor, ExtendedValue v);

  friend bool operator==(ExtendedValue a, ExtendedValue b) = default;
  friend auto operator<=>(ExtendedValue a, ExtendedValue b) {
    return a.value_ <=> b.value_;
  }

  // Shortest round-trip text, "inf" for the infinite value.
  std::string ToString() const;

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();
  struct Raw {};
  constexpr ExtendedValue(double v, Raw) : value_(v) {}

  double value_ = 0.0;
};

inline ExtendedValue Min(ExtendedValue a, ExtendedValue b) {
  return b < a ? b : a;
}

std::ostream& operator<<(std::ostream& os, ExtendedValue v);

}  // namespace bipotkit

#endif  // BIPOTKIT_EXTENDED_VALUE_H_
