#pragma once

#include <stdexcept>
#include <string>

namespace concord {

// Base class for all library errors so callers can catch a single type.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParamOutOfRange : Error {
    explicit ParamOutOfRange(const std::string& what) : Error(what) {}
};

struct NotSymmetric : Error {
    explicit NotSymmetric(const std::string& what) : Error(what) {}
};

struct NotInvariant : Error {
    explicit NotInvariant(const std::string& what) : Error(what) {}
};

struct OrderViolated : Error {
    explicit OrderViolated(const std::string& what) : Error(what) {}
};

struct NoKernel : Error {
    explicit NoKernel(const std::string& what) : Error(what) {}
};

struct NoDensity : Error {
    explicit NoDensity(const std::string& what) : Error(what) {}
};

struct NoSamplingPath : Error {
    explicit NoSamplingPath(const std::string& what) : Error(what) {}
};

struct InvalidGenerators : Error {
    explicit InvalidGenerators(const std::string& what) : Error(what) {}
};

struct InvalidPickands : Error {
    explicit InvalidPickands(const std::string& what) : Error(what) {}
};

struct InvalidGenerator : Error {
    explicit InvalidGenerator(const std::string& what) : Error(what) {}
};

struct QuadratureFailure : Error {
    explicit QuadratureFailure(const std::string& what) : Error(what) {}
};

struct TiesPresent : Error {
    explicit TiesPresent(const std::string& what) : Error(what) {}
};

struct TooFewObservations : Error {
    explicit TooFewObservations(const std::string& what) : Error(what) {}
};

struct DegenerateVariance : Error {
    explicit DegenerateVariance(const std::string& what) : Error(what) {}
};

struct DataFormatError : Error {
    explicit DataFormatError(const std::string& what) : Error(what) {}
};

} // namespace concord
