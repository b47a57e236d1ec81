#include "pinch/error.hpp"

namespace pinch {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_config:
      return "invalid config";
    case Errc::domain:
      return "domain error";
    case Errc::infeasible_sphere:
      return "infeasible sphere";
    case Errc::unsupported_threshold:
      return "unsupported threshold";
    case Errc::solver:
      return "solver error";
  }
  return "unknown error";
}

void fail(Errc code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace pinch
