// Copyright 2026 The famq Authors
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

#include <stdexcept>
#include <string>

namespace famq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Qubit count outside the supported range.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Vector/matrix/parameter lengths that do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Invalid qubit target list (duplicate or out of range).
class TargetError : public Error {
 public:
  using Error::Error;
};

/// Kraus set that is not trace preserving, or a channel applied to a pure state.
class ChannelError : public Error {
 public:
  using Error::Error;
};

/// Index arguments (round, qubit, node) outside their domain.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Constructed exactly-solvable instance whose certificate cannot hold.
class CertificateError : public Error {
 public:
  using Error::Error;
};

/// Metric that is undefined for the instance (e.g. zero minimum cost).
class MetricError : public Error {
 public:
  using Error::Error;
};

/// Qubits that cannot be brought adjacent on the grid.
class RoutingError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration, graph file or circuit file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace famq
