// Copyright 2026 The qswitch Authors
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

namespace qswitch {

// Normalization and Hermiticity tolerance for probability vectors and states.
inline constexpr double kNormTolerance = 1e-12;
// Smallest eigenvalue still accepted as positive semidefinite.
inline constexpr double kPsdFloor = -1e-10;
// Probability vectors further than this from unit sum are rejected; closer
// ones are silently renormalized.
inline constexpr double kRenormalizeLimit = 1e-9;

}  // namespace qswitch
