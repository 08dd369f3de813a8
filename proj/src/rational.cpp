#include "kdirac/rational.hpp"

#include <ostream>

namespace kdirac {

GaussRat GaussRat::parse(const std::string& re, const std::string& im) {
  mpq_class r, i;
  if (r.set_str(re, 10) != 0) throw std::invalid_argument("bad rational: " + re);
  if (i.set_str(im, 10) != 0) throw std::invalid_argument("bad rational: " + im);
  r.canonicalize();
  i.canonicalize();
  return GaussRat(r, i);
}

std::string GaussRat::str() const {
  if (im_ == 0) return re_.get_str();
  if (re_ == 0) return im_.get_str() + "*I";
  std::string s = re_.get_str();
  if (im_ > 0) s += "+";
  return s + im_.get_str() + "*I";
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << z.str(); }

}  // namespace kdirac
