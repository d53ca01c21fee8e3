#pragma once

// The spectral decimation dynamical system on [0, 6]: the forward quadratic
// map R(z) = z(5 - z), its inverse branches
//
//   Phi_-(z) = (5 - sqrt(25 - 4z)) / 2        (computed as 2z / (5 + s))
//   Phi_+(z) = (5 + sqrt(25 - 4z)) / 2
//
// finite branch words applied left to right, and the derivative of Phi_-.
// Phi_- is evaluated in the cancellation-free form 2z/(5+s) so enclosures
// stay tight deep into iterated orbits.

#include <cstddef>
#include <optional>
#include <string>

#include "sgspec/ball.hpp"

namespace sgspec {

enum class Branch : char { Minus = '-', Plus = '+' };

// Finite word over {-,+}. Letters are indexed from 1 (w_1 first) and applied
// in that order, matching composition written right to left. Serialized as
// the ASCII string w_1 w_2 ... w_k, e.g. "+--" applies '+' first.
class BranchWord {
 public:
  BranchWord() = default;

  static BranchWord parse(const std::string& text) {
    BranchWord w;
    for (char c : text) {
      if (c != '-' && c != '+') {
        throw DomainError("BranchWord: invalid letter '" + std::string(1, c) + "'");
      }
      w.letters_.push_back(c);
    }
    return w;
  }

  const std::string& str() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Branch at(std::size_t index1) const {  // 1-based, as in w_1 ... w_k
    return letters_.at(index1 - 1) == '+' ? Branch::Plus : Branch::Minus;
  }

  void append(Branch b) { letters_.push_back(static_cast<char>(b)); }

  BranchWord appended(Branch b) const {
    BranchWord w = *this;
    w.append(b);
    return w;
  }

  BranchWord prefix(std::size_t length) const {
    BranchWord w;
    w.letters_ = letters_.substr(0, length);
    return w;
  }

  // 1-based index of the last '+', or 0 when the word is all '-' or empty.
  std::size_t last_plus_index() const {
    auto pos = letters_.rfind('+');
    return pos == std::string::npos ? 0 : pos + 1;
  }

  bool operator==(const BranchWord& other) const { return letters_ == other.letters_; }

 private:
  std::string letters_;
};

inline Ball forward_map(const Ball& z) {
  return mul(z, sub(Ball(5, z.precision()), z));
}

namespace detail {

// sqrt(25 - 4z) with the domain check z in [0, 25/4].
inline Ball branch_root(const Ball& z, const char* who) {
  if (!z.is_nonnegative()) {
    throw DomainError(std::string(who) + ": argument below 0");
  }
  Ball four_z = mul(Ball(4, z.precision()), z);
  Ball disc = sub(Ball(25, z.precision()), four_z);
  if (!disc.is_nonnegative()) {
    throw DomainError(std::string(who) + ": argument above 25/4");
  }
  return sqrt(disc);
}

}  // namespace detail

inline Ball phi(Branch branch, const Ball& z) {
  Ball s = detail::branch_root(z, "phi");
  Ball five(5, z.precision());
  if (branch == Branch::Plus) {
    return halve(add(five, s));
  }
  // 2z/(5+s); at z = 25/4 the denominator is exactly 5, never near zero.
  return div(add(z, z), add(five, s));
}

inline Ball phi_word(const BranchWord& word, const Ball& seed) {
  Ball z = seed;
  for (std::size_t i = 1; i <= word.size(); ++i) {
    z = phi(word.at(i), z);
  }
  return z;
}

inline Ball phi_minus_iter(const Ball& z, long n) {
  if (n < 0) throw DomainError("phi_minus_iter: negative iteration count");
  Ball x = z;
  for (long i = 0; i < n; ++i) {
    x = phi(Branch::Minus, x);
  }
  return x;
}

// Phi_-'(z) = (25 - 4z)^{-1/2}.
inline Ball dphi_minus(const Ball& z) {
  Ball s = detail::branch_root(z, "dphi_minus");
  if (s.contains_zero()) {
    throw DomainError("dphi_minus: derivative unbounded at z = 25/4");
  }
  return div(Ball(1, z.precision()), s);
}

}  // namespace sgspec
