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

#include "akq/cecc.hpp"
#include "akq/errors.hpp"

namespace akq {

std::string to_string(Cecc code) {
    return code == Cecc::none ? "none" : "hamming74";
}

Cecc parse_cecc(const std::string &name) {
    if (name == "none") {
        return Cecc::none;
    }
    if (name == "hamming74") {
        return Cecc::hamming74;
    }
    throw InvalidConfiguration("unknown error-correcting code '" + name + "'");
}

Bits hamming74_encode(const Bits &data) {
    if (data.size() % 4 != 0) {
        throw InvalidConfiguration("Hamming(7,4) input length must be a multiple of 4, got " +
                                   std::to_string(data.size()));
    }
    Bits out;
    out.reserve(data.size() / 4 * 7);
    for (size_t k = 0; k < data.size(); k += 4) {
        uint8_t d1 = data[k], d2 = data[k + 1], d3 = data[k + 2], d4 = data[k + 3];
        out.insert(out.end(), {static_cast<uint8_t>(d1 ^ d2 ^ d4), static_cast<uint8_t>(d1 ^ d3 ^ d4), d1,
                               static_cast<uint8_t>(d2 ^ d3 ^ d4), d2, d3, d4});
    }
    return out;
}

DecodeResult hamming74_decode(const Bits &received) {
    if (received.size() % 7 != 0) {
        throw InvalidConfiguration("Hamming(7,4) codeword stream length must be a multiple of 7, got " +
                                   std::to_string(received.size()));
    }
    DecodeResult r;
    r.data.reserve(received.size() / 7 * 4);
    for (size_t k = 0; k < received.size(); k += 7) {
        uint8_t c[8];
        for (int p = 1; p <= 7; p++) {
            c[p] = received[k + p - 1] & 1;
        }
        int syndrome = (c[1] ^ c[3] ^ c[5] ^ c[7]) | (c[2] ^ c[3] ^ c[6] ^ c[7]) << 1 | (c[4] ^ c[5] ^ c[6] ^ c[7]) << 2;
        if (syndrome) {
            c[syndrome] ^= 1;
            r.corrected++;
        }
        r.data.insert(r.data.end(), {c[3], c[5], c[6], c[7]});
    }
    return r;
}

Bits cecc_encode(const Bits &data, Cecc code) {
    return code == Cecc::none ? data : hamming74_encode(data);
}

DecodeResult cecc_decode(const Bits &received, Cecc code) {
    if (code == Cecc::none) {
        return {received, 0};
    }
    return hamming74_decode(received);
}

size_t cecc_coded_length(size_t data_len, Cecc code) {
    return code == Cecc::none ? data_len : data_len / 4 * 7;
}

}  // namespace akq
