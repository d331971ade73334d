#pragma once

#include <stdexcept>
#include <string>

namespace reidem {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input: bad files, bad letters, bad tables,
// knobs outside their documented ranges.
struct InputError : Error {
  using Error::Error;
};

// A mathematical precondition failed: a map is not a homomorphism, an
// endomorphism is not bijective where bijectivity is required, and so on.
struct MathError : Error {
  using Error::Error;
};

}  // namespace reidem
