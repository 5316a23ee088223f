#pragma once

#include <stdexcept>

namespace homalg::cli {

/// Bad parameters detected after parsing; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace homalg::cli
