#pragma once

#include <stdexcept>
#include <string>

namespace qmock {

/// Raised for every precondition or construction failure in the kernel.
/// The message is the stable, user-visible diagnostic.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qmock
