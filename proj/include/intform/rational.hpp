// Exact rational scalars, always in lowest terms with positive denominator.
//
// Values are kept in a pair of int64 components with __int128 intermediates;
// results that cannot be reduced back into int64 promote transparently to an
// arbitrary-precision backend. The workloads here create enormous numbers of
// tiny rationals, so the small representation never touching the heap is what
// makes exhaustive verification affordable.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace intform {

using Integer = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class Rational {
 public:
  Rational() = default;
  Rational(int n) : num_(n) {}                 // NOLINT: implicit by design
  Rational(long long n) : num_(n) {}           // NOLINT
  Rational(long long n, long long d) { assign_small(n, d); }
  explicit Rational(const Integer& n) {
    if (fits(n))
      num_ = n.convert_to<long long>();
    else
      big_ = std::make_shared<const BigRational>(n);
  }
  Rational(const Integer& n, const Integer& d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    set_big(BigRational(n, d));
  }
  explicit Rational(const BigRational& b) { set_big(b); }

  bool is_small() const { return !big_; }

  Integer numerator() const { return big_ ? boost::multiprecision::numerator(*big_) : Integer(num_); }
  Integer denominator() const { return big_ ? boost::multiprecision::denominator(*big_) : Integer(den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;  // both canonical
    return a.to_big() == b.to_big();
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
      __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
      return lhs < rhs ? std::strong_ordering::less
                       : lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    BigRational x = a.to_big(), y = b.to_big();
    return x < y ? std::strong_ordering::less
                 : x > y ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator-(const Rational& a) {
    if (!a.big_) {
      Rational r;
      r.num_ = -a.num_;
      r.den_ = a.den_;
      return r;
    }
    return Rational(BigRational(-*a.big_));
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.num_ == 0) return b;
      if (b.num_ == 0) return a;
      long long g = std::gcd(a.den_, b.den_);
      __int128 db = a.den_ / g;
      __int128 num = static_cast<__int128>(a.num_) * (b.den_ / g) + static_cast<__int128>(b.num_) * db;
      __int128 den = db * b.den_;
      return from_i128(num, den);
    }
    return Rational(BigRational(a.to_big() + b.to_big()));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.num_ == 0 || b.num_ == 0) return Rational();
      long long g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
      long long g2 = std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
      __int128 num = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
      __int128 den = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
      return from_i128_canonical(num, den);
    }
    return Rational(BigRational(a.to_big() * b.to_big()));
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (b.num_ == 0) throw std::domain_error("rational division by zero");
      if (a.num_ == 0) return Rational();
      long long bn = b.num_, bd = b.den_;
      if (bn < 0) {
        bn = -bn;
        bd = -bd;  // carried as sign on the numerator side below
      }
      long long g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, bn);
      long long g2 = std::gcd(bd < 0 ? -bd : bd, a.den_);
      __int128 num = static_cast<__int128>(a.num_ / g1) * (bd / g2);
      __int128 den = static_cast<__int128>(a.den_ / g2) * (bn / g1);
      return from_i128_canonical(num, den);
    }
    if (b == Rational()) throw std::domain_error("rational division by zero");
    return Rational(BigRational(a.to_big() / b.to_big()));
  }

 private:
  static bool fits(const Integer& n) {
    static const Integer lo(std::numeric_limits<long long>::min());
    static const Integer hi(std::numeric_limits<long long>::max());
    return n >= lo && n <= hi;
  }

  void assign_small(long long n, long long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num_ = n;
    den_ = d;
  }

  void set_big(BigRational b) {
    static const Integer lo = Integer(std::numeric_limits<long long>::min()) + 1;
    static const Integer hi(std::numeric_limits<long long>::max());
    const Integer& n = boost::multiprecision::numerator(b);
    const Integer& d = boost::multiprecision::denominator(b);
    if (n >= lo && n <= hi && d <= hi) {
      num_ = n.convert_to<long long>();
      den_ = d.convert_to<long long>();
      big_.reset();
    } else {
      big_ = std::make_shared<const BigRational>(std::move(b));
    }
  }

  BigRational to_big() const {
    if (big_) return *big_;
    return BigRational(Integer(num_), Integer(den_));
  }

  static __int128 gcd_i128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  // reduce and store, spilling to the big representation when needed
  static Rational from_i128(__int128 num, __int128 den) {
    if (num == 0) return Rational();
    __int128 g = gcd_i128(num, den);
    return from_i128_canonical(num / g, den / g);
  }
  static Rational from_i128_canonical(__int128 num, __int128 den) {
    // strict lower bound keeps unary negation overflow-free
    constexpr __int128 lo = std::numeric_limits<long long>::min();
    constexpr __int128 hi = std::numeric_limits<long long>::max();
    if (num > lo && num <= hi && den <= hi) {
      Rational r;
      r.num_ = static_cast<long long>(num);
      r.den_ = static_cast<long long>(den);
      return r;
    }
    bool neg = num < 0;
    if (neg) num = -num;
    auto to_int = [](__int128 v) {
      Integer out(static_cast<unsigned long long>(v >> 64));
      out <<= 64;
      out += static_cast<unsigned long long>(v);
      return out;
    };
    Integer n = to_int(num);
    if (neg) n = -n;
    return Rational(BigRational(n, to_int(den)));
  }

  long long num_ = 0, den_ = 1;                // canonical when big_ is null
  std::shared_ptr<const BigRational> big_;     // canonical, out of int64 range
};

inline std::string to_string(const Rational& r) {
  Integer d = r.denominator();
  if (d == 1) return r.numerator().str();
  return r.numerator().str() + "/" + d.str();
}

// Accepts "3", "-3", "3/4", "-3/4" with optional surrounding whitespace.
inline Rational rational_from_string(std::string_view s) {
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  if (a == std::string_view::npos) throw std::invalid_argument("empty rational literal");
  s = s.substr(a, b - a + 1);
  auto is_int = [](std::string_view v) {
    if (!v.empty() && (v[0] == '-' || v[0] == '+')) v.remove_prefix(1);
    if (v.empty()) return false;
    for (char c : v)
      if (c < '0' || c > '9') return false;
    return true;
  };
  size_t slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(s)) throw std::invalid_argument("bad rational literal: " + std::string(s));
    return Rational(Integer(std::string(s)));
  }
  std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!is_int(num) || !is_int(den)) throw std::invalid_argument("bad rational literal: " + std::string(s));
  Integer d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
  return Rational(Integer(std::string(num)), d);
}

inline Integer factorial(int n) {
  Integer r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact at every step
  }
  return r;
}

}  // namespace intform
