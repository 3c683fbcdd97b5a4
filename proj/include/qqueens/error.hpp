#pragma once

#include <stdexcept>
#include <string>

namespace qq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input to a constructor or operation (illegal move, h+k = 0, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

}  // namespace qq
