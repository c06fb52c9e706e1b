#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eulercert/certify.hpp"

namespace eulercert {

struct WorkspaceConfig {
  std::optional<std::size_t> dimension;
  NormKind norm = NormKind::L2;
  double tol_dist = 1e-9;
  EqualityMode equality_mode = EqualityMode::Auto;
  int sample_density = 64;

  Settings settings() const { return {{norm, tol_dist}, {equality_mode, sample_density}}; }
  // Throws InputError when an input of dimension `dim` conflicts with the config.
  void check(std::size_t dim) const;
};

// Exit codes: 0 success, 1 verification failure, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulercert
