#include "conicval/value.hpp"

namespace conicval {

std::string Value::to_string() const {
  if (inf_) return "inf";
  if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace conicval
