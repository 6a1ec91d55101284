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

namespace famq {

// Numerical tolerances shared by validation checks and tests.
struct Tolerances {
  static constexpr double norm = 1e-10;        // Σ|a|² and trace
  static constexpr double hermitian = 1e-10;
  static constexpr double min_eigenvalue = -1e-9;
  static constexpr double unitary = 1e-10;
  static constexpr double kraus = 1e-10;       // Σ K†K = I
  static constexpr double imaginary = 1e-10;   // discarded residue in expectations
  static constexpr double exact = 1e-12;
  static constexpr double ground_energy = 1e-9;  // ground-set membership
};

inline constexpr int kMaxQubits = 8;

}  // namespace famq
