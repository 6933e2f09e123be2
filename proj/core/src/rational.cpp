#include "uhw/rational.hpp"

namespace uhw {

namespace {

[[noreturn]] void overflow() { throw std::overflow_error("rational arithmetic overflow"); }

int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) overflow();
  return r;
}

int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) overflow();
  return r;
}

int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

std::string int128_str(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // two-step negation avoids UB on INT128_MIN, which we never normalize to anyway
  unsigned __int128 u = neg ? (~static_cast<unsigned __int128>(v)) + 1 : static_cast<unsigned __int128>(v);
  char buf[48];
  int pos = 48;
  while (u != 0) {
    buf[--pos] = static_cast<char>('0' + static_cast<int>(u % 10));
    u /= 10;
  }
  std::string s(buf + pos, buf + 48);
  return neg ? "-" + s : s;
}

Rational Rational::normalized(int128 n, int128 d) {
  if (d == 0) throw std::domain_error("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational(n, d, true);
}

Rational::Rational(long long n, long long d) { *this = normalized(n, d); }

Rational Rational::make(int128 n, int128 d) { return normalized(n, d); }

Rational Rational::parse(const std::string& s) {
  std::size_t i = 0;
  auto read_int = [&](const char* what) -> int128 {
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      neg = s[i] == '-';
      ++i;
    }
    if (i >= s.size() || s[i] < '0' || s[i] > '9')
      throw std::invalid_argument(std::string("bad rational literal (") + what + "): '" + s + "'");
    int128 v = 0;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') {
      v = checked_add(checked_mul(v, 10), s[i] - '0');
      ++i;
    }
    return neg ? -v : v;
  };
  int128 n = read_int("numerator");
  int128 d = 1;
  if (i < s.size() && s[i] == '/') {
    ++i;
    d = read_int("denominator");
  }
  if (i != s.size()) throw std::invalid_argument("trailing junk in rational literal: '" + s + "'");
  return normalized(n, d);
}

Rational Rational::operator-() const { return Rational(-num_, den_, true); }

Rational Rational::operator+(const Rational& o) const {
  // reduce cross-denominators first to keep intermediates small
  int128 g = gcd128(den_, o.den_);
  int128 da = den_ / g, db = o.den_ / g;
  int128 n = checked_add(checked_mul(num_, db), checked_mul(o.num_, da));
  int128 d = checked_mul(den_, db);
  return normalized(n, d);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  int128 g1 = gcd128(num_, o.den_);
  int128 g2 = gcd128(o.num_, den_);
  return normalized(checked_mul(num_ / g1, o.num_ / g2), checked_mul(den_ / g2, o.den_ / g1));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  return *this * Rational(o.den_, o.num_, true);
}

bool Rational::operator<(const Rational& o) const {
  return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
}

std::string Rational::str() const {
  if (den_ == 1) return int128_str(num_);
  return int128_str(num_) + "/" + int128_str(den_);
}

std::string to_string(const Rational& r) { return r.str(); }

}  // namespace uhw
