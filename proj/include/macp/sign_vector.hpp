#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace macp {

enum class Sign : std::int8_t { Neg = -1, Zero = 0, Pos = 1 };

constexpr Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
constexpr Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

template <class T>
Sign sign_of(const T& value) {
  if (value > 0) return Sign::Pos;
  if (value < 0) return Sign::Neg;
  return Sign::Zero;
}

char to_char(Sign s);
Sign sign_from_char(char c);  // accepts '+', '-', '0'

// Largest ground set a SignVector can hold.
inline constexpr int kMaxSignVectorLength = 32;

// A word over {-, 0, +}, stored as two disjoint bit masks.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(int n);
  SignVector(int n, std::uint32_t positive, std::uint32_t negative);

  static SignVector parse(std::string_view word);

  int size() const { return n_; }
  Sign operator[](int i) const;
  void set(int i, Sign s);

  std::uint32_t positive() const { return pos_; }
  std::uint32_t negative() const { return neg_; }
  std::uint32_t support() const { return pos_ | neg_; }
  int support_size() const;
  bool is_zero() const { return support() == 0; }

  SignVector operator-() const { return SignVector(n_, neg_, pos_); }
  // Composition X∘Y: X where X is nonzero, Y elsewhere.
  SignVector compose(const SignVector& other) const;
  // Componentwise order 0 < +, 0 < -.
  bool is_below(const SignVector& other) const {
    return (pos_ & ~other.pos_) == 0 && (neg_ & ~other.neg_) == 0;
  }
  // Elements where the two vectors carry opposite nonzero signs.
  std::uint32_t separation(const SignVector& other) const {
    return (pos_ & other.neg_) | (neg_ & other.pos_);
  }

  std::string str() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend auto operator<=>(const SignVector&, const SignVector&) = default;

 private:
  int n_ = 0;
  std::uint32_t pos_ = 0;
  std::uint32_t neg_ = 0;
};

}  // namespace macp
