#include "gentor/exact.hpp"

#include <cctype>
#include <numeric>
#include <string>

namespace gentor {

Fraction::Fraction(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) {
    throw DomainError("fraction with zero denominator");
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

namespace {

BigInt parse_int(std::string_view s, std::string_view whole) {
  std::string buf;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) buf.push_back(c);
  }
  std::size_t start = (!buf.empty() && (buf[0] == '-' || buf[0] == '+')) ? 1 : 0;
  if (buf.size() == start) {
    throw DomainError("malformed fraction '" + std::string(whole) + "'");
  }
  for (std::size_t i = start; i < buf.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(buf[i]))) {
      throw DomainError("malformed fraction '" + std::string(whole) + "'");
    }
  }
  if (buf[0] == '+') buf.erase(0, 1);
  return BigInt(buf);
}

}  // namespace

Fraction Fraction::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Fraction(parse_int(text, text), 1);
  }
  return Fraction(parse_int(text.substr(0, slash), text),
                  parse_int(text.substr(slash + 1), text));
}

Fraction Fraction::reciprocal() const {
  if (num_ == 0) throw DomainError("reciprocal of zero");
  return Fraction(den_, num_);
}

Fraction Fraction::operator-() const {
  Fraction r = *this;
  r.num_ = -r.num_;
  return r;
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }

Fraction operator*(const Fraction& a, const Fraction& b) {
  return Fraction(a.num_ * b.num_, a.den_ * b.den_);
}

Fraction operator/(const Fraction& a, const Fraction& b) { return a * b.reciprocal(); }

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Fraction::str() const { return num_.get_str() + "/" + den_.get_str(); }

}  // namespace gentor

namespace gentor {

Slope Slope::parse(std::string_view text) {
  auto to_long = [&](std::string_view s) {
    BigInt v = parse_int(s, text);
    if (!v.fits_slong_p()) throw DomainError("slope component out of range in '" + std::string(text) + "'");
    return v.get_si();
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Slope{to_long(text), 1};
  return Slope{to_long(text.substr(0, slash)), to_long(text.substr(slash + 1))};
}

bool Slope::reduced() const noexcept {
  return std::gcd(p, q) == 1;
}

Fraction Slope::value() const {
  if (q == 0) throw DomainError("slope " + str() + " has no finite value");
  return Fraction(BigInt(p), BigInt(q));
}

}  // namespace gentor
