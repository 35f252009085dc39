#pragma once

#include "symbolic/rational.hpp"

#include <string>
#include <vector>

namespace hcpca {

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass = true;
  std::string json;
};

// Runs the whole symbolic battery: kernel mass identities, closed-form
// expansion matches, bound identities, certificate replays, exact grid scans
// and the min-max grid sweeps. `corrupt` flips one frozen coefficient to
// demonstrate that a broken fixture is caught and named.
VerifyReport run_verify(const Rat& grid_step, bool corrupt = false);

}  // namespace hcpca
