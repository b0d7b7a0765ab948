// Copyright 2026 The akq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

#include "akq/bits.hpp"

namespace akq {

/// out = T x over GF(2), T an out_len x n binary Toeplitz matrix whose
/// n + out_len - 1 diagonals come from a random stream keyed by `hash_seed`.
/// Entry T[i][j] is diagonal bit (i - j + n - 1).
Bits toeplitz_hash(const Bits &bits, uint64_t hash_seed, size_t out_len);

/// Diagonal bits used by toeplitz_hash for an (out_len x n) matrix.
Bits toeplitz_diagonals(uint64_t hash_seed, size_t n, size_t out_len);

/// Privacy amplification: toeplitz_hash restricted to out_len <= bits.size().
Bits privacy_amplify(const Bits &bits, uint64_t hash_seed, size_t out_len);

}  // namespace akq
