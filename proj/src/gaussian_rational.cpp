#include "mdgas/gaussian_rational.hpp"

#include <cctype>

#include "mdgas/error.hpp"

namespace mdgas {

Rational parse_rational(const std::string& text) {
  std::string s = text;
  if (s.empty()) throw InvalidArgument("empty rational");
  if (s.find('/') == std::string::npos) {
    const auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      const std::size_t scale = s.size() - dot - 1;
      s = digits + "/1" + std::string(scale, '0');
    }
  }
  for (char ch : s)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
      throw InvalidArgument("malformed rational: " + text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw InvalidArgument("malformed rational: " + text);
  if (sgn(q.get_den()) == 0) throw InvalidArgument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational d = o.norm2();
  if (sgn(d) == 0) throw InvalidArgument("division by zero Gaussian rational");
  Rational r = (re_ * o.re_ + im_ * o.im_) / d;
  Rational i = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  const Rational a = abs(im_);
  imag = (a == 1) ? "i" : a.get_str() + "i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return re_.get_str() + (sgn(im_) < 0 ? " - " : " + ") + imag;
}

}  // namespace mdgas
