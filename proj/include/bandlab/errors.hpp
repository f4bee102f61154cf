#pragma once

#include <stdexcept>
#include <string>

namespace bandlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidBandSet : Error {
  using Error::Error;
};

// Query needs band data beyond the retained truncation.
struct TruncationExceeded : Error {
  using Error::Error;
};

// Bound kind does not match the region of Re z / sign of omega.
struct WrongRegion : Error {
  using Error::Error;
};

struct OnSpectrum : Error {
  using Error::Error;
};

struct FewerBandsFound : Error {
  int found;
  FewerBandsFound(int found_, const std::string& msg) : Error(msg), found(found_) {}
};

struct NearSpectrum : Error {
  using Error::Error;
};

struct MiddleFactorSingular : Error {
  using Error::Error;
};

struct NonConvergence : Error {
  int iterations;
  NonConvergence(int iters, const std::string& msg) : Error(msg), iterations(iters) {}
};

struct QuadratureError : Error {
  double achieved_error;
  QuadratureError(double err, const std::string& msg) : Error(msg), achieved_error(err) {}
};

// Configuration rejected before any computation; message names the field.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace bandlab
