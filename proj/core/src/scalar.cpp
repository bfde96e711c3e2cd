#include "symtwist/scalar.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace symtwist {

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Scalar::rational: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q, mpq_class(0));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar::inverse: division by zero");
  mpq_class n2 = re_ * re_ + im_ * im_;
  return Scalar(re_ / n2, -im_ / n2);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = re;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

namespace {

std::string rat_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// abs(q) rendered with explicit sign handled by caller
std::string rat_abs_str(const mpq_class& q) {
  mpq_class a = abs(q);
  return rat_str(a);
}

}  // namespace

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (sgn(re_) != 0) out += rat_str(re_);
  if (sgn(im_) != 0) {
    if (!out.empty())
      out += (sgn(im_) < 0) ? "-" : "+";
    else if (sgn(im_) < 0)
      out += "-";
    mpq_class a = abs(im_);
    if (a == 1)
      out += "i";
    else
      out += rat_abs_str(im_) + "*i";
  }
  return out;
}

std::string Scalar::report_str() const {
  std::string out = re_.get_num().get_str() + "/" + re_.get_den().get_str();
  out += (sgn(im_) < 0) ? "-" : "+";
  mpq_class a = abs(im_);
  out += a.get_num().get_str() + "/" + a.get_den().get_str() + "*i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace symtwist
