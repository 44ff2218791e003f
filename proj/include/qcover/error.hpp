#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qcover {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t cap)
      : Error("closure exceeded cap of " + std::to_string(cap) + " elements"),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class MixedBackends : public Error {
 public:
  MixedBackends() : Error("generators do not share a backend") {}
};

class ElementNotInGroup : public Error {
 public:
  explicit ElementNotInGroup(const std::string& what)
      : Error("element not in group: " + what) {}
};

class MalformedTable : public Error {
 public:
  using Error::Error;
};

/// Input to a constructor violates one of its structural preconditions.
/// `witness` names the offending element when there is one.
class PreconditionFailed : public Error {
 public:
  PreconditionFailed(const std::string& kind, const std::string& witness)
      : Error(kind + (witness.empty() ? "" : ": " + witness)),
        kind_(kind),
        witness_(witness) {}
  const std::string& kind() const { return kind_; }
  const std::string& witness() const { return witness_; }

 private:
  std::string kind_;
  std::string witness_;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class EnumerationIncomplete : public Error {
 public:
  explicit EnumerationIncomplete(std::size_t high_water)
      : Error("coset enumeration exceeded its limit after " +
              std::to_string(high_water) + " cosets"),
        high_water_(high_water) {}
  std::size_t high_water() const { return high_water_; }

 private:
  std::size_t high_water_;
};

class NotClosed : public Error {
 public:
  NotClosed() : Error("1-form is not closed") {}
};

}  // namespace qcover
