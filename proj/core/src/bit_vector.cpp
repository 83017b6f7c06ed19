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

#include "capp/bit_vector.hpp"

#include <bit>
#include <string>

#include "capp/error.hpp"

namespace capp {
namespace {

std::size_t limb_count(std::size_t width) {
  return (width + BitVector::kLimbBits - 1) / BitVector::kLimbBits;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BitVector::BitVector(std::size_t width) : width_(width), limbs_(limb_count(width), 0) {}

BitVector BitVector::from_u64(std::size_t width, std::uint64_t value) {
  BitVector v(width);
  if (width < kLimbBits && (value >> width) != 0) {
    throw WidthError("value does not fit in " + std::to_string(width) + " bits");
  }
  if (width == 0) {
    if (value != 0) throw WidthError("value does not fit in 0 bits");
    return v;
  }
  v.limbs_[0] = value;
  return v;
}

BitVector BitVector::from_hex(std::size_t width, std::string_view text) {
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    text.remove_prefix(2);
  }
  if (text.empty()) throw WidthError("empty hex literal");

  BitVector v(width);
  std::size_t bit = 0;
  for (auto it = text.rbegin(); it != text.rend(); ++it, bit += 4) {
    const int d = hex_digit(*it);
    if (d < 0) throw WidthError("invalid hex digit '" + std::string(1, *it) + "'");
    for (int k = 0; k < 4; ++k) {
      if ((d >> k) & 1) {
        if (bit + k >= width) {
          throw WidthError("hex literal 0x" + std::string(text) + " exceeds " +
                           std::to_string(width) + " bits");
        }
        v.set(bit + k);
      }
    }
  }
  return v;
}

BitVector BitVector::from_bytes(std::span<const std::uint8_t> bytes) {
  BitVector v(bytes.size() * 8);
  std::size_t bit = 0;
  for (auto it = bytes.rbegin(); it != bytes.rend(); ++it, bit += 8) {
    v.limbs_[bit / kLimbBits] |= Limb{*it} << (bit % kLimbBits);
  }
  return v;
}

bool BitVector::test(std::size_t bit) const {
  if (bit >= width_) throw WidthError("bit index out of range");
  return (limbs_[bit / kLimbBits] >> (bit % kLimbBits)) & 1U;
}

void BitVector::set(std::size_t bit, bool value) {
  if (bit >= width_) throw WidthError("bit index out of range");
  const Limb m = Limb{1} << (bit % kLimbBits);
  if (value) {
    limbs_[bit / kLimbBits] |= m;
  } else {
    limbs_[bit / kLimbBits] &= ~m;
  }
}

void BitVector::fill(bool value) {
  for (auto& l : limbs_) l = value ? ~Limb{0} : Limb{0};
  clear_padding();
}

bool BitVector::any() const noexcept {
  for (Limb l : limbs_) {
    if (l != 0) return true;
  }
  return false;
}

bool BitVector::all() const noexcept {
  if (limbs_.empty()) return true;
  for (std::size_t i = 0; i + 1 < limbs_.size(); ++i) {
    if (limbs_[i] != ~Limb{0}) return false;
  }
  return limbs_.back() == top_limb_mask();
}

std::size_t BitVector::count() const noexcept {
  std::size_t n = 0;
  for (Limb l : limbs_) n += static_cast<std::size_t>(std::popcount(l));
  return n;
}

std::optional<std::size_t> BitVector::find_first() const noexcept {
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    if (limbs_[i] != 0) {
      return i * kLimbBits + static_cast<std::size_t>(std::countr_zero(limbs_[i]));
    }
  }
  return std::nullopt;
}

std::uint64_t BitVector::to_u64() const {
  for (std::size_t i = 1; i < limbs_.size(); ++i) {
    if (limbs_[i] != 0) throw WidthError("value does not fit in 64 bits");
  }
  return limbs_.empty() ? 0 : limbs_[0];
}

std::string BitVector::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t digits = width_ == 0 ? 1 : (width_ + 3) / 4;
  std::string out(digits + 2, '0');
  out[1] = 'x';
  for (std::size_t d = 0; d < digits && d * 4 < width_; ++d) {
    const std::size_t bit = d * 4;
    // A nibble never straddles limbs because 64 is a multiple of 4.
    const unsigned nibble = (limbs_[bit / kLimbBits] >> (bit % kLimbBits)) & 0xFU;
    out[out.size() - 1 - d] = kDigits[nibble];
  }
  return out;
}

std::vector<std::uint8_t> BitVector::to_bytes() const {
  if (width_ % 8 != 0) throw WidthError("width is not a whole number of bytes");
  const std::size_t n = width_ / 8;
  std::vector<std::uint8_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t bit = i * 8;
    out[n - 1 - i] = static_cast<std::uint8_t>(limbs_[bit / kLimbBits] >> (bit % kLimbBits));
  }
  return out;
}

BitVector& BitVector::operator&=(const BitVector& rhs) {
  require_same_width(rhs, "&");
  for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] &= rhs.limbs_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& rhs) {
  require_same_width(rhs, "|");
  for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] |= rhs.limbs_[i];
  return *this;
}

BitVector& BitVector::operator^=(const BitVector& rhs) {
  require_same_width(rhs, "^");
  for (std::size_t i = 0; i < limbs_.size(); ++i) limbs_[i] ^= rhs.limbs_[i];
  return *this;
}

BitVector BitVector::operator~() const {
  BitVector out = *this;
  for (auto& l : out.limbs_) l = ~l;
  out.clear_padding();
  return out;
}

BitVector::Limb BitVector::top_limb_mask() const noexcept {
  const std::size_t used = width_ % kLimbBits;
  return used == 0 ? ~Limb{0} : (Limb{1} << used) - 1;
}

void BitVector::require_same_width(const BitVector& other, const char* op) const {
  if (other.width_ != width_) {
    throw WidthError(std::string("width mismatch in operator") + op + ": " +
                     std::to_string(width_) + " vs " + std::to_string(other.width_));
  }
}

void BitVector::clear_padding() noexcept {
  if (!limbs_.empty()) limbs_.back() &= top_limb_mask();
}

void TagVector::keep_first() {
  const auto first = find_first();
  fill(false);
  if (first) set(*first);
}

bool equal_under_mask(const BitVector& a, const BitVector& b, const BitVector& ignore) {
  if (a.width() != b.width() || a.width() != ignore.width()) {
    throw WidthError("width mismatch in masked compare");
  }
  const auto la = a.limbs();
  const auto lb = b.limbs();
  const auto li = ignore.limbs();
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (((la[i] ^ lb[i]) & ~li[i]) != 0) return false;
  }
  return true;
}

}  // namespace capp
