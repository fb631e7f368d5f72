#pragma once

#include <stdexcept>
#include <string>

namespace ale {

enum class ErrorKind {
  Domain,       // argument outside the mathematical domain
  Contract,     // precondition on a geometric object violated
  Pole,         // evaluation at a pole
  Degenerate,   // collapsed curve, coincident roots, singular conic
  Geometry,     // spherical-geometric constraint violated
  Convergence,  // iterative solver gave up
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  const char* kind_name() const noexcept {
    switch (kind_) {
      case ErrorKind::Domain: return "domain";
      case ErrorKind::Contract: return "contract";
      case ErrorKind::Pole: return "pole";
      case ErrorKind::Degenerate: return "degenerate";
      case ErrorKind::Geometry: return "geometry";
      case ErrorKind::Convergence: return "convergence";
    }
    return "unknown";
  }

 private:
  ErrorKind kind_;
};

}  // namespace ale
