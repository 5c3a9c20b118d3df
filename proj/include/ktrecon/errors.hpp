#pragma once

#include <stdexcept>
#include <string>

namespace ktrecon {

// Error categories map onto the CLI exit codes: usage -> 1, data -> 2,
// numeric -> 3.
enum class ErrorKind { Usage, Data, Numeric };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct ShapeMismatchError : Error {
  explicit ShapeMismatchError(const std::string& msg)
      : Error(ErrorKind::Data, "shape mismatch: " + msg) {}
};

struct ZeroVolumeError : Error {
  explicit ZeroVolumeError(const std::string& msg = "volume is identically zero")
      : Error(ErrorKind::Data, msg) {}
};

struct InvalidAccelerationError : Error {
  explicit InvalidAccelerationError(const std::string& msg)
      : Error(ErrorKind::Data, "invalid acceleration: " + msg) {}
};

struct InvalidDensityError : Error {
  explicit InvalidDensityError(const std::string& msg)
      : Error(ErrorKind::Data, "invalid density: " + msg) {}
};

struct InvalidSpecError : Error {
  explicit InvalidSpecError(const std::string& msg)
      : Error(ErrorKind::Data, "invalid spec: " + msg) {}
};

struct IoError : Error {
  explicit IoError(const std::string& msg) : Error(ErrorKind::Data, msg) {}
};

struct SvdFailureError : Error {
  explicit SvdFailureError(const std::string& msg)
      : Error(ErrorKind::Numeric, "svd failure: " + msg) {}
};

struct OddSpatialDimError : Error {
  explicit OddSpatialDimError(const std::string& msg)
      : Error(ErrorKind::Data, "odd spatial dim: " + msg) {}
};

struct DivergedLossError : Error {
  explicit DivergedLossError(const std::string& msg)
      : Error(ErrorKind::Numeric, "diverged loss: " + msg) {}
};

struct ZeroReferenceError : Error {
  explicit ZeroReferenceError(const std::string& msg = "reference volume is zero")
      : Error(ErrorKind::Data, msg) {}
};

struct FrameTooSmallError : Error {
  explicit FrameTooSmallError(const std::string& msg)
      : Error(ErrorKind::Data, "frame too small: " + msg) {}
};

struct EmptyRegionError : Error {
  explicit EmptyRegionError(const std::string& msg = "metric region is empty")
      : Error(ErrorKind::Data, msg) {}
};

struct UsageError : Error {
  explicit UsageError(const std::string& msg) : Error(ErrorKind::Usage, msg) {}
};

}  // namespace ktrecon
