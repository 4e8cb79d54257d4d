#include "isg/rational.hpp"

namespace isg {

std::string QC::str() const {
  if (sgn(im) == 0) return re.get_str();
  std::string s = re.get_str();
  if (sgn(im) > 0) s += "+";
  s += im.get_str() + "i";
  return s;
}

}  // namespace isg
