#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lambda_lab {

/// A subset of an ordered index set with at most 64 positions, one bit per
/// position. Width is carried so that complements and full-set tests are
/// well defined; operations on subsets of different widths throw.
class Subset {
 public:
  Subset() : bits_(0), width_(0) {}
  Subset(std::uint64_t bits, int width) : bits_(bits), width_(width) {
    if (width < 0 || width > 64) throw std::invalid_argument("subset width out of range");
    bits_ &= mask(width);
  }

  static Subset none(int width) { return Subset(0, width); }
  static Subset all(int width) { return Subset(mask(width), width); }
  static Subset single(int pos, int width) {
    check_pos(pos, width);
    return Subset(std::uint64_t{1} << pos, width);
  }

  std::uint64_t bits() const { return bits_; }
  int width() const { return width_; }

  bool contains(int pos) const {
    check_pos(pos, width_);
    return (bits_ >> pos) & 1u;
  }
  Subset with(int pos) const {
    check_pos(pos, width_);
    return Subset(bits_ | (std::uint64_t{1} << pos), width_);
  }
  Subset without(int pos) const {
    check_pos(pos, width_);
    return Subset(bits_ & ~(std::uint64_t{1} << pos), width_);
  }

  int count() const { return __builtin_popcountll(bits_); }
  bool empty() const { return bits_ == 0; }
  bool full() const { return bits_ == mask(width_); }

  bool subset_of(const Subset& other) const {
    same_width(other);
    return (bits_ & ~other.bits_) == 0;
  }

  Subset operator|(const Subset& o) const { same_width(o); return Subset(bits_ | o.bits_, width_); }
  Subset operator&(const Subset& o) const { same_width(o); return Subset(bits_ & o.bits_, width_); }
  Subset operator^(const Subset& o) const { same_width(o); return Subset(bits_ ^ o.bits_, width_); }
  /// Set difference.
  Subset operator-(const Subset& o) const { same_width(o); return Subset(bits_ & ~o.bits_, width_); }
  Subset complement() const { return Subset(~bits_, width_); }

  bool operator==(const Subset& o) const { return width_ == o.width_ && bits_ == o.bits_; }
  bool operator!=(const Subset& o) const { return !(*this == o); }

  std::vector<int> positions() const {
    std::vector<int> out;
    for (int i = 0; i < width_; ++i)
      if ((bits_ >> i) & 1u) out.push_back(i);
    return out;
  }

 private:
  static std::uint64_t mask(int width) {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  }
  static void check_pos(int pos, int width) {
    if (pos < 0 || pos >= width) throw std::out_of_range("subset position out of range");
  }
  void same_width(const Subset& o) const {
    if (width_ != o.width_) throw std::invalid_argument("subset width mismatch");
  }

  std::uint64_t bits_;
  int width_;
};

/// Number of subsets of a width-w index set. Callers iterate masks
/// 0..subset_space_size(w)-1 when enumerating the whole powerset.
inline std::uint64_t subset_space_size(int width) {
  if (width < 0 || width >= 63) throw std::overflow_error("powerset too large to enumerate");
  return std::uint64_t{1} << width;
}

}  // namespace lambda_lab
