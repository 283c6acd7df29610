#pragma once

#include "quintic/bigreal.hpp"

#include <string>
#include <vector>

namespace quintic {

/// One evaluated identity: |left - right| at a point.
struct IdentityCheck {
  std::string id;
  std::string point;
  BigReal residual;
  std::string note;
};

using IdentityFragment = std::vector<IdentityCheck>;

}  // namespace quintic
