#pragma once
// Exact rational arithmetic over checked 128-bit integers.
//
// Everything downstream (root coordinates, Shapovalov entries, inertia
// pivots) is decided by exact sign tests, so no floating point appears
// anywhere in this library.  Weight coordinates live in (1/4)Z for the
// A3 catalog, (1/2)Z for spinor weights, (1/3)Z for the e6 center
// direction; Gram entries at the degrees we ever form stay far below the
// 2^127 ceiling.  All products and sums go through the compiler's
// overflow-checked builtins and throw std::overflow_error rather than wrap,
// so a silently wrong sign cannot occur.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace uhw {

using int128 = __int128;

std::string int128_str(int128 v);

class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d);
  static Rational make(int128 n, int128 d);

  // Parses "-3/4", "7", "+1/2".  Throws std::invalid_argument on junk.
  static Rational parse(const std::string& s);

  int128 num() const { return num_; }
  int128 den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }
  bool is_nonneg_integer() const { return den_ == 1 && num_ >= 0; }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  // "-3/4" or "5"; the canonical form used in every JSON artifact.
  std::string str() const;

 private:
  Rational(int128 n, int128 d, bool /*raw*/) : num_(n), den_(d) {}
  static Rational normalized(int128 n, int128 d);
  int128 num_;
  int128 den_;  // > 0 always
};

std::string to_string(const Rational& r);

struct RationalHash {
  std::size_t operator()(const Rational& r) const {
    auto fold = [](int128 v) {
      auto u = static_cast<unsigned __int128>(v);
      return static_cast<std::size_t>(u) ^ static_cast<std::size_t>(u >> 64);
    };
    return fold(r.num()) * 0x9e3779b97f4a7c15ULL + fold(r.den());
  }
};

}  // namespace uhw
