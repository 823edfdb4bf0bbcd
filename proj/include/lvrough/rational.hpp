#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lvrough {

/// Exact rational label for lattice elements. All engine arithmetic runs on
/// carrier indices; Rational exists only for I/O and display.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
    normalize();
  }
  explicit Rational(std::int64_t n) : num_(n), den_(1) {}

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Accepts "3/10", "0.3", "1", "-1/2". Decimal strings parse exactly.
  static Rational parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("rational: empty string");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
      return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_int(text));
    std::string head = text.substr(0, dot);
    std::string tail = text.substr(dot + 1);
    if (tail.empty() || tail.size() > 15 ||
        tail.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("rational: bad decimal '" + text + "'");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) den *= 10;
    bool neg = !head.empty() && head[0] == '-';
    std::int64_t whole = head.empty() || head == "-" ? 0 : parse_int(head);
    std::int64_t frac = parse_int(tail);
    std::int64_t num = (neg ? -1 : 1) * ((neg ? -whole : whole) * den + frac);
    return Rational(num, den);
  }

 private:
  static std::int64_t parse_int(const std::string& s) {
    std::size_t pos = 0;
    std::int64_t v;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("rational: bad integer '" + s + "'");
    }
    if (pos != s.size()) throw std::invalid_argument("rational: trailing junk in '" + s + "'");
    return v;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace lvrough
