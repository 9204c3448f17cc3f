#pragma once

#include <stdexcept>
#include <string>

namespace recon {

/// Thrown when a weight-function is evaluated at a point where its reduced
/// denominator vanishes.  The combination of substencil reconstructions does
/// not exist there.
class PoleError : public std::runtime_error {
public:
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by the linear-system weight oracle when the system matrix is
/// singular at the requested point.
class SingularSystemError : public std::runtime_error {
public:
  explicit SingularSystemError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an exact certification step fails.  This never corresponds to
/// a valid mathematical outcome; it signals a bug.
class CertificationError : public std::logic_error {
public:
  explicit CertificationError(const std::string& what) : std::logic_error(what) {}
};

} // namespace recon
