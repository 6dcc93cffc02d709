// Copyright 2026 The mmfair Authors
//
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

#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace mmfair {

inline constexpr const char* kVersion = "0.1.0";

/// Caller passed something that violates a documented precondition.
class invalid_input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A dataset file or its schema is unusable (missing values, bad labels, ...).
class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A run configuration is inconsistent or incomplete.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw invalid_input_error(msg);
}

inline bool is_finite(double x) { return std::isfinite(x); }

}  // namespace mmfair
