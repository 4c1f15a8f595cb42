#include "qpslab/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace qpslab {

namespace {

mpq_class parse_part(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  if (s.front() == '+') s.erase(0, 1);
  const auto slash = s.find('/');
  auto check_integer = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  if (slash == std::string::npos) {
    if (!check_integer(s)) throw std::invalid_argument("malformed rational '" + s + "'");
    return mpq_class(mpz_class(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!check_integer(num) || !check_integer(den) || den[0] == '-')
    throw std::invalid_argument("malformed rational '" + s + "'");
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

}  // namespace

GaussRational::GaussRational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  re_ = mpq_class(num, den);
  re_.canonicalize();
}

GaussRational::GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussRational GaussRational::parse(std::string_view re, std::string_view im) {
  GaussRational r;
  r.re_ = parse_part(re);
  r.im_ = parse_part(im);
  return r;
}

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  GaussRational r;
  if (is_real()) {
    r.re_ = 1 / re_;
    return r;
  }
  const mpq_class norm = re_ * re_ + im_ * im_;
  r.re_ = re_ / norm;
  r.im_ = -im_ / norm;
  return r;
}

double GaussRational::magnitude() const {
  return std::hypot(re_.get_d(), im_.get_d());
}

std::complex<double> GaussRational::to_complex() const { return {re_.get_d(), im_.get_d()}; }

std::string GaussRational::to_string() const {
  if (is_real()) return re_.get_str();
  std::string s = re_.get_str();
  if (sgn(im_) > 0) s += "+";
  return s + im_.get_str() + "i";
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (is_real() && o.is_real()) {
    re_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::ostream& operator<<(std::ostream& os, const GaussRational& x) { return os << x.to_string(); }

}  // namespace qpslab
