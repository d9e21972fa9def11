#ifndef GROWTH_ERRORS_HPP
#define GROWTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace growth {

/** Bad arguments to an operation (k = 0, negative rates, ...). */
class InvalidArgument : public std::invalid_argument {
public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

/** A packet or packet stream that cannot be parsed or regenerated. */
class CorruptPacket : public std::runtime_error {
public:
  explicit CorruptPacket(const std::string& what) : std::runtime_error(what) {}
};

/** Malformed input data (bad CSV, bad config file, truncated stream). */
class MalformedInput : public std::runtime_error {
public:
  explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

/** Numerical failure: divergent integration, impossible fit, ... */
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/** Too few usable data points for a fit. */
class InsufficientData : public NumericalError {
public:
  explicit InsufficientData(const std::string& what) : NumericalError(what) {}
};

/** Model parameters outside the supported regime (e.g. mu <= 0). */
class UnsupportedModel : public NumericalError {
public:
  explicit UnsupportedModel(const std::string& what) : NumericalError(what) {}
};

}  // namespace growth

#endif
