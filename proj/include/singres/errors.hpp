#pragma once

#include <stdexcept>
#include <string>

namespace singres {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument hits a pole of the function (Gamma poles, spectral singularity).
class PoleError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ParameterError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Principal value does not exist (excision values do not settle).
class PvFailure : public Error {
public:
    using Error::Error;
};

// Resolution form applied to a test function outside its validity class.
class ClassViolation : public Error {
public:
    using Error::Error;
};

// A limit sweep failed to converge.
class DivergenceError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace singres
