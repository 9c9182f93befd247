// Copyright 2026 The Weldcode Authors
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

#ifndef WELDCODE_BITVEC_H
#define WELDCODE_BITVEC_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace weldcode {

/// Dense vector over GF(2), packed into 64-bit words.
///
/// Bits beyond `size()` in the last word are always zero, so word-wise
/// comparisons and popcounts never see stray bits.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {}

    size_t size() const { return num_bits_; }
    size_t num_words() const { return words_.size(); }

    bool get(size_t k) const { return (words_[k >> 6] >> (k & 63)) & 1; }
    void set(size_t k, bool value = true) {
        uint64_t mask = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= mask;
        } else {
            words_[k >> 6] &= ~mask;
        }
    }
    void flip(size_t k) { words_[k >> 6] ^= uint64_t{1} << (k & 63); }

    BitVector &operator^=(const BitVector &other) {
        for (size_t i = 0; i < words_.size(); i++) {
            words_[i] ^= other.words_[i];
        }
        return *this;
    }
    BitVector &operator&=(const BitVector &other) {
        for (size_t i = 0; i < words_.size(); i++) {
            words_[i] &= other.words_[i];
        }
        return *this;
    }
    BitVector &operator|=(const BitVector &other) {
        for (size_t i = 0; i < words_.size(); i++) {
            words_[i] |= other.words_[i];
        }
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector &b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector &b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector &b) { return a |= b; }

    size_t popcount() const {
        size_t total = 0;
        for (uint64_t w : words_) {
            total += static_cast<size_t>(std::popcount(w));
        }
        return total;
    }
    bool any() const {
        for (uint64_t w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }
    bool none() const { return !any(); }

    /// Inner product mod 2.
    bool dot(const BitVector &other) const {
        uint64_t acc = 0;
        for (size_t i = 0; i < words_.size(); i++) {
            acc ^= words_[i] & other.words_[i];
        }
        return std::popcount(acc) & 1;
    }

    /// Index of the lowest set bit, or size() when the vector is zero.
    size_t first_set() const {
        for (size_t i = 0; i < words_.size(); i++) {
            if (words_[i]) {
                return i * 64 + static_cast<size_t>(std::countr_zero(words_[i]));
            }
        }
        return num_bits_;
    }

    std::vector<size_t> ones() const {
        std::vector<size_t> out;
        for (size_t i = 0; i < words_.size(); i++) {
            uint64_t w = words_[i];
            while (w) {
                out.push_back(i * 64 + static_cast<size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    const uint64_t *data() const { return words_.data(); }
    uint64_t *data() { return words_.data(); }

    bool operator==(const BitVector &other) const = default;

    /// Lexicographic order on the bit string read from index 0 upward: at the
    /// first differing index, the vector holding a 0 is smaller.
    bool lex_less(const BitVector &other) const {
        for (size_t i = 0; i < words_.size(); i++) {
            uint64_t diff = words_[i] ^ other.words_[i];
            if (diff) {
                uint64_t low = diff & (~diff + 1);
                return (other.words_[i] & low) != 0;
            }
        }
        return false;
    }

    size_t hash() const {
        size_t h = std::hash<size_t>{}(num_bits_);
        for (uint64_t w : words_) {
            h ^= std::hash<uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

struct BitVectorHash {
    size_t operator()(const BitVector &v) const { return v.hash(); }
};

}  // namespace weldcode

#endif
