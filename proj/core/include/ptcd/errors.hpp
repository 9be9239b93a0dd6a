#ifndef PTCD_ERRORS_HPP
#define PTCD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ptcd {

/// Invalid configuration or parameter value (bad weights, block lengths, grids, ...).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem / serialization failure.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ptcd

#endif
