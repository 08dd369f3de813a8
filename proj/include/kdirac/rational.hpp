#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace kdirac {

/// Exact Gaussian rational: re + im*I with re, im in lowest terms.
/// All arithmetic is exact; there is no floating point anywhere.
class GaussRat {
public:
  GaussRat() : re_(0), im_(0) {}
  GaussRat(long v) : re_(v), im_(0) {}
  GaussRat(long num, long den) : re_(num, den), im_(0) { re_.canonicalize(); }
  GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }

  /// Parse from "p/q" (or "p") strings for the real and imaginary parts.
  static GaussRat parse(const std::string& re, const std::string& im);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }

  GaussRat conj() const { return GaussRat(re_, mpq_class(-im_)); }

  /// |z|^2 = re^2 + im^2, a nonnegative rational; zero iff z = 0.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }

  GaussRat operator-() const { return GaussRat(mpq_class(-re_), mpq_class(-im_)); }

  GaussRat& operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = r;
    im_ = i;
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    if (o.is_zero()) throw std::domain_error("GaussRat: division by zero");
    mpq_class n = o.norm2();
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
    mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = r;
    im_ = i;
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  /// Total order, used only for canonical container keys.
  friend bool operator<(const GaussRat& a, const GaussRat& b) {
    int c = cmp(a.re_, b.re_);
    if (c != 0) return c < 0;
    return cmp(a.im_, b.im_) < 0;
  }

  std::string str() const;
  std::string re_str() const { return re_.get_str(); }
  std::string im_str() const { return im_.get_str(); }

private:
  mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRat& z);

}  // namespace kdirac
