#pragma once

#include <stdexcept>
#include <string>

namespace quotvol {

// Raised by the algebra and volume layers. The CLI maps it to exit code 3.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace quotvol
