#pragma once

#include <stdexcept>

namespace mtjsyn {

/// Invalid device, stepper, or run configuration.
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A protocol was asked for something its inputs cannot provide.
class ProtocolError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or mismatched stimulus bitmap.
class MaskError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

} // namespace mtjsyn
