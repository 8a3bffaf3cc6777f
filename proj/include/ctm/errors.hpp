#ifndef CTM_ERRORS_HPP
#define CTM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ctm {

// Error taxonomy mirrors the CLI exit-code contract:
// usage -> 1, data -> 2, model -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

class ModelError : public Error {
 public:
  using Error::Error;
};

}  // namespace ctm

#endif
