#pragma once

#include <stdexcept>
#include <string>

namespace macp {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mathematical precondition failures (CLI exit code 4).
class MathError : public Error {
 public:
  using Error::Error;
};

class RankDeficient : public MathError { public: using MathError::MathError; };
class InvalidChirotope : public MathError { public: using MathError::MathError; };
class LoopElement : public MathError { public: using MathError::MathError; };
class NotAPartialOrder : public MathError { public: using MathError::MathError; };
class NotComparable : public MathError { public: using MathError::MathError; };
class ElementNotFound : public MathError { public: using MathError::MathError; };
class RealizationMismatch : public MathError { public: using MathError::MathError; };
class NotACoatom : public MathError { public: using MathError::MathError; };
class EmptyBelowSet : public MathError { public: using MathError::MathError; };
class NonUniqueMax : public MathError { public: using MathError::MathError; };
class NotContained : public MathError { public: using MathError::MathError; };
class InvalidFlag : public MathError { public: using MathError::MathError; };

// Resource limits (CLI exit code 2).
class ResourceError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public ResourceError { public: using ResourceError::ResourceError; };
class LimitExceeded : public ResourceError { public: using ResourceError::ResourceError; };

// Malformed text or JSON input (CLI exit code 3).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Outcome of a property check: empty when every check passed.
struct Violation {
  std::string rule;
  std::string detail;
};

}  // namespace macp
