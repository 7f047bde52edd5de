#ifndef NILORBIT_GAUSSIAN_HPP
#define NILORBIT_GAUSSIAN_HPP

#include <gmpxx.h>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace nilorbit {

/// Gaussian rational a + b*i with arbitrary-precision rational a, b.
/// All arithmetic is exact; equality is decidable.
class GaussianRational {
public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}
  GaussianRational(long num, long den) : re_(num, den), im_(0) { re_.canonicalize(); }
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

  /// Parses "a/b" rational strings for both parts.
  static GaussianRational from_strings(const std::string& re, const std::string& im) {
    mpq_class r, m;
    if (r.set_str(re, 10) != 0 || m.set_str(im, 10) != 0)
      throw std::invalid_argument("bad rational literal: " + re + " / " + im);
    r.canonicalize();
    m.canonicalize();
    return GaussianRational(r, m);
  }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }

  /// |z|^2 = re^2 + im^2, a nonnegative rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    mpq_class n = o.norm();
    if (n == 0) throw std::domain_error("division by zero GaussianRational");
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class m = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::string re_str() const { return re_.get_str(); }
  std::string im_str() const { return im_.get_str(); }

  /// Canonical single-string form: "a/b", "c/d*i", or "a/b+c/d*i" (sign folded in).
  std::string str() const {
    if (im_ == 0) return re_.get_str();
    std::string s;
    if (re_ != 0) s = re_.get_str();
    if (im_ > 0 && !s.empty()) s += "+";
    if (im_ == -1)
      s += "-";
    else if (im_ != 1)
      s += im_.get_str() + "*";
    s += "i";
    return s;
  }

private:
  mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

using Scalar = GaussianRational;

}  // namespace nilorbit

#endif
