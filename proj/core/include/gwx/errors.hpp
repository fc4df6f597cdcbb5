#pragma once

#include <stdexcept>
#include <string>

namespace gwx {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// series
class NonInvertibleLeading : public Error { using Error::Error; };
class ZeroSeries : public Error { using Error::Error; };
class NonzeroConstantTerm : public Error { using Error::Error; };
class ConstantTermNotOne : public Error { using Error::Error; };

// partitions
class PartsMismatch : public Error { using Error::Error; };

// generic precondition failure (negative order, non-positive wall weight, ...)
class PreconditionViolation : public Error { using Error::Error; };

// tables
class KindMismatch : public Error { using Error::Error; };
class MissingGenus : public Error { using Error::Error; };
class ClassNotCovered : public Error { using Error::Error; };

// input
class ParseError : public Error { using Error::Error; };

}  // namespace gwx
