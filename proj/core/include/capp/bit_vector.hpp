// Copyright 2026 The capp-emu Authors
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

#ifndef CAPP_BIT_VECTOR_HPP
#define CAPP_BIT_VECTOR_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace capp {

/// Fixed-width bit vector, bit 0 is the least significant bit.
///
/// Storage is a little-endian array of 64-bit limbs. Bits above `width()` in
/// the top limb are always zero, so limb-wise comparison is exact equality.
class BitVector {
 public:
  using Limb = std::uint64_t;
  static constexpr std::size_t kLimbBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t width);

  /// Low `width` bits of `value`; throws WidthError if `value` has bits above width.
  static BitVector from_u64(std::size_t width, std::uint64_t value);

  /// Parses hex digits with an optional `0x`/`0X` prefix. The value is
  /// zero-extended to `width`; significant bits beyond `width` throw WidthError.
  static BitVector from_hex(std::size_t width, std::string_view text);

  /// Big-endian bytes (most significant first); `bytes.size()*8` becomes the width.
  static BitVector from_bytes(std::span<const std::uint8_t> bytes);

  std::size_t width() const noexcept { return width_; }

  bool test(std::size_t bit) const;
  void set(std::size_t bit, bool value = true);
  void reset(std::size_t bit) { set(bit, false); }

  void fill(bool value);
  bool any() const noexcept;
  bool none() const noexcept { return !any(); }
  bool all() const noexcept;
  std::size_t count() const noexcept;

  /// Index of the lowest set bit, or nullopt when none is set.
  std::optional<std::size_t> find_first() const noexcept;

  /// Value as an integer; throws WidthError when a bit at index >= 64 is set.
  std::uint64_t to_u64() const;

  /// `0x` followed by width/4 lowercase digits (rounded up), zero padded.
  std::string to_hex() const;

  /// Big-endian bytes; requires width to be a multiple of 8.
  std::vector<std::uint8_t> to_bytes() const;

  BitVector& operator&=(const BitVector& rhs);
  BitVector& operator|=(const BitVector& rhs);
  BitVector& operator^=(const BitVector& rhs);
  BitVector operator~() const;

  friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }
  friend BitVector operator|(BitVector lhs, const BitVector& rhs) { return lhs |= rhs; }
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::span<const Limb> limbs() const noexcept { return limbs_; }
  std::span<Limb> limbs() noexcept { return limbs_; }

  /// Mask of the valid bits in the top limb.
  Limb top_limb_mask() const noexcept;

 protected:
  void require_same_width(const BitVector& other, const char* op) const;

 private:
  void clear_padding() noexcept;

  std::size_t width_ = 0;
  std::vector<Limb> limbs_;
};

/// Contents of one cell, or the comparand register.
class Word : public BitVector {
 public:
  using BitVector::BitVector;
  Word() = default;
  explicit Word(BitVector bits) : BitVector(std::move(bits)) {}

  static Word from_u64(std::size_t width, std::uint64_t value) {
    return Word(BitVector::from_u64(width, value));
  }
  static Word from_hex(std::size_t width, std::string_view text) {
    return Word(BitVector::from_hex(width, text));
  }
};

/// Search/write mask. A 1 bit means "ignore this position".
class Mask : public BitVector {
 public:
  using BitVector::BitVector;
  Mask() = default;
  explicit Mask(BitVector bits) : BitVector(std::move(bits)) {}

  static Mask from_u64(std::size_t width, std::uint64_t value) {
    return Mask(BitVector::from_u64(width, value));
  }
  static Mask from_hex(std::size_t width, std::string_view text) {
    return Mask(BitVector::from_hex(width, text));
  }
  static Mask compare_all(std::size_t width) { return Mask(width); }
  static Mask ignore_all(std::size_t width) {
    Mask m(width);
    m.fill(true);
    return m;
  }
};

/// One bit per cell; a set bit marks the cell as a responder.
class TagVector : public BitVector {
 public:
  using BitVector::BitVector;
  TagVector() = default;
  explicit TagVector(BitVector bits) : BitVector(std::move(bits)) {}

  /// Clears every bit except the lowest set one.
  void keep_first();
};

/// True iff `a` and `b` agree at every position where `ignore` is 0.
bool equal_under_mask(const BitVector& a, const BitVector& b, const BitVector& ignore);

}  // namespace capp

#endif  // CAPP_BIT_VECTOR_HPP
