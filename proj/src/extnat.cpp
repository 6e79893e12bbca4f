#include <qindep/extnat.hpp>

namespace qindep {

std::string ExtVal::str() const {
  if (inf_) return "inf";
  return v_.get_str();
}

}  // namespace qindep
