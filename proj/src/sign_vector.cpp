#include "macp/sign_vector.hpp"

#include <bit>

#include "macp/error.hpp"

namespace macp {

char to_char(Sign s) {
  switch (s) {
    case Sign::Pos: return '+';
    case Sign::Neg: return '-';
    default: return '0';
  }
}

Sign sign_from_char(char c) {
  switch (c) {
    case '+': return Sign::Pos;
    case '-': return Sign::Neg;
    case '0': return Sign::Zero;
    default: throw ParseError(std::string("invalid sign character '") + c + "'");
  }
}

SignVector::SignVector(int n) : n_(n) {
  if (n < 0 || n > kMaxSignVectorLength) throw LimitExceeded("sign vector length out of range");
}

SignVector::SignVector(int n, std::uint32_t positive, std::uint32_t negative)
    : SignVector(n) {
  pos_ = positive;
  neg_ = negative;
}

SignVector SignVector::parse(std::string_view word) {
  if (word.size() > static_cast<std::size_t>(kMaxSignVectorLength))
    throw ParseError("sign vector too long");
  SignVector v(static_cast<int>(word.size()));
  for (std::size_t i = 0; i < word.size(); ++i) v.set(static_cast<int>(i), sign_from_char(word[i]));
  return v;
}

Sign SignVector::operator[](int i) const {
  const std::uint32_t bit = 1u << i;
  if (pos_ & bit) return Sign::Pos;
  if (neg_ & bit) return Sign::Neg;
  return Sign::Zero;
}

void SignVector::set(int i, Sign s) {
  const std::uint32_t bit = 1u << i;
  pos_ &= ~bit;
  neg_ &= ~bit;
  if (s == Sign::Pos) pos_ |= bit;
  if (s == Sign::Neg) neg_ |= bit;
}

int SignVector::support_size() const { return std::popcount(support()); }

SignVector SignVector::compose(const SignVector& other) const {
  const std::uint32_t free = ~support();
  return SignVector(n_, pos_ | (other.pos_ & free), neg_ | (other.neg_ & free));
}

std::string SignVector::str() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = to_char((*this)[i]);
  return out;
}

}  // namespace macp
