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

#include "bipotkit/extended_value.h"

#include <cmath>
#include <cstdio>

#include "bipotkit/error.h"

namespace bipotkit {

ExtendedValue::ExtendedValue(double v) : value_(v) {
  if (std::isnan(v)) throw PreconditionError("ExtendedValue: NaN");
  if (v == -kInf) throw PreconditionError("ExtendedValue: -inf is not representable");
}

double ExtendedValue::value() const {
  if (is_infinite()) throw PreconditionError("ExtendedValue: value() of +inf");
  return value_;
}

ExtendedValue& ExtendedValue::operator+=(ExtendedValue other) {
  value_ += other.value_;
  // Two huge finite values may overflow to +inf, which is still valid.
  return *this;
}

ExtendedValue operator-(ExtendedValue a, ExtendedValue b) {
  if (b.is_infinite()) {
    throw PreconditionError("ExtendedValue: subtracting +inf");
  }
  return ExtendedValue(a.value_ - b.value_, ExtendedValue::Raw{});
}

ExtendedValue Scale(double factor, ExtendedValue v) {
  if (!(factor >= 0.0) || std::isinf(factor)) {
    throw PreconditionError("ExtendedValue: scale factor must be finite and >= 0");
  }
  if (factor == 0.0) return ExtendedValue();
  return ExtendedValue(factor * v.value_, ExtendedValue::Raw{});
}

std::string ExtendedValue::ToString() const {
  if (is_infinite()) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value_);
  return buf;
}

std::ostream& operator<<(std::ostream& os, ExtendedValue v) {
  return os << v.ToString();
}

}  // namespace bipotkit
