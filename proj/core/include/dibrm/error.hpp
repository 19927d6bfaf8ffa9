#pragma once

#include <stdexcept>
#include <string>

namespace dibrm {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad data or configuration. The CLI maps this to exit code 1.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// Filesystem or stream failure. The CLI maps this to exit code 2.
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace dibrm
