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

#include <string>

#include "akq/bits.hpp"

namespace akq {

/// Classical error-correcting code applied to the bit values carried by the
/// returned qubits.
enum class Cecc { none, hamming74 };

std::string to_string(Cecc code);
/// Accepts "none" and "hamming74"; throws InvalidConfiguration otherwise.
Cecc parse_cecc(const std::string &name);

struct DecodeResult {
    Bits data;
    size_t corrected = 0;
};

/// Codeword layout p1 p2 d1 p3 d2 d3 d4: parity bits sit at the power-of-two
/// positions, so a nonzero syndrome is the 1-based position of the flipped
/// bit.
Bits hamming74_encode(const Bits &data);
DecodeResult hamming74_decode(const Bits &received);

/// Input length must be a multiple of 4 for hamming74.
Bits cecc_encode(const Bits &data, Cecc code = Cecc::hamming74);
/// Input length must be a multiple of 7 for hamming74.
DecodeResult cecc_decode(const Bits &received, Cecc code = Cecc::hamming74);
/// Coded length for `data_len` data bits.
size_t cecc_coded_length(size_t data_len, Cecc code);

}  // namespace akq
