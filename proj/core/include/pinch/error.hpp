#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pinch {

enum class Errc {
  invalid_config,
  domain,
  infeasible_sphere,      // sphere of radius R never reaches the ground plane
  unsupported_threshold,  // outage cap outside (0, 0.5]
  solver,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace pinch
