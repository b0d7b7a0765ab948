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
#include <string>
#include <string_view>
#include <vector>

namespace akq {

/// One bit per byte, values 0 or 1.
using Bits = std::vector<uint8_t>;

inline std::string bits_to_string(const Bits &bits) {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

inline Bits bits_from_string(std::string_view s) {
    Bits out;
    out.reserve(s.size());
    for (char c : s) {
        out.push_back(c == '1' ? 1 : 0);
    }
    return out;
}

inline size_t hamming_distance(const Bits &a, const Bits &b) {
    size_t n = 0;
    for (size_t k = 0; k < a.size() && k < b.size(); k++) {
        n += (a[k] != b[k]);
    }
    return n + (a.size() > b.size() ? a.size() - b.size() : b.size() - a.size());
}

}  // namespace akq
