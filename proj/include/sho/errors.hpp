#pragma once

#include <stdexcept>
#include <string>

namespace sho {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// specfun
class PoleError : public Error { using Error::Error; };
class ParameterError : public Error { using Error::Error; };
class NonConvergence : public Error { using Error::Error; };

// model / spectrum
class SupercriticalError : public Error {
public:
    explicit SupercriticalError(double alpha);
    double alpha() const noexcept { return alpha_; }

private:
    double alpha_;
};
class InadmissibleError : public Error { using Error::Error; };
class SingularPointError : public Error { using Error::Error; };

// quad
class DepthExceeded : public Error { using Error::Error; };
class PVDivergent : public Error { using Error::Error; };
class NonIntegrableError : public Error { using Error::Error; };
class DomainMismatch : public Error { using Error::Error; };

// oracle
class ConvergenceError : public Error { using Error::Error; };
class BracketError : public Error { using Error::Error; };
class ShapeMismatch : public Error { using Error::Error; };

} // namespace sho
