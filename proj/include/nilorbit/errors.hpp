#ifndef NILORBIT_ERRORS_HPP
#define NILORBIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nilorbit {

/// Invalid user-supplied data (descriptors, configs, weights out of contract).
class DescriptorError : public std::runtime_error {
public:
  explicit DescriptorError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal identity that must hold exactly failed to.
class ConsistencyError : public std::runtime_error {
public:
  explicit ConsistencyError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Generator extraction ran out of degrees before reaching the expected rank.
class DegreeBoundError : public std::runtime_error {
public:
  explicit DegreeBoundError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace nilorbit

#endif
