#ifndef PERMREL_ERRORS_HPP_
#define PERMREL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace permrel {

  // Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input: a non-bijection, a letter out of range, bad syntax.
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  // The operation needs a structural property of H that does not hold.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // A class-size or enumeration cap was hit.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  // A self-check between two independent routes failed.  Always a bug.
  class ConsistencyError : public Error {
   public:
    using Error::Error;
  };

}  // namespace permrel

#endif  // PERMREL_ERRORS_HPP_
