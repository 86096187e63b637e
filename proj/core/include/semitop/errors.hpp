#pragma once

// Exception types thrown by the semitop library. Every error derives from
// semitop::Error so callers can catch the whole family at once.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace semitop {

  using Element = std::uint32_t;

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Ragged, empty or out-of-range multiplication table.
  class ShapeError : public Error {
   public:
    using Error::Error;
  };

  class NonAssociative : public Error {
   public:
    NonAssociative(Element i, Element j, Element k)
        : Error("table is not associative at (" + std::to_string(i) + ", "
                + std::to_string(j) + ", " + std::to_string(k) + ")"),
          i(i),
          j(j),
          k(k) {}
    Element i, j, k;
  };

  class NotIdempotent : public Error {
   public:
    explicit NotIdempotent(Element e)
        : Error("element " + std::to_string(e) + " is not idempotent"), element(e) {}
    Element element;
  };

  class NotAnIdeal : public Error {
   public:
    using Error::Error;
  };

  class NotAMonoid : public Error {
   public:
    using Error::Error;
  };

  class MinimalIdealNotRectangular : public Error {
   public:
    using Error::Error;
  };

  class NotRegular : public Error {
   public:
    using Error::Error;
  };

  // A chain group would exceed the configured column cap.
  class DegreeTooLarge : public Error {
   public:
    DegreeTooLarge(std::size_t degree, std::size_t rank, std::size_t cap)
        : Error("chain group C_" + std::to_string(degree) + " has rank "
                + std::to_string(rank) + ", above the column cap "
                + std::to_string(cap)),
          degree(degree),
          rank(rank),
          cap(cap) {}
    std::size_t degree, rank, cap;
  };

  class InsufficientDegrees : public Error {
   public:
    using Error::Error;
  };

  class InfeasibleDegree : public Error {
   public:
    using Error::Error;
  };

  class CosetCapExceeded : public Error {
   public:
    explicit CosetCapExceeded(std::size_t cap)
        : Error("coset enumeration exceeded " + std::to_string(cap)
                + " active cosets; raise the cap"),
          cap(cap) {}
    std::size_t cap;
  };

  class ExactnessFailure : public Error {
   public:
    ExactnessFailure(std::string position, std::string defect)
        : Error("exactness failure at " + position + ": " + defect),
          position(std::move(position)),
          defect(std::move(defect)) {}
    std::string position;
    std::string defect;
  };

  class ParseError : public Error {
   public:
    ParseError(std::size_t position, std::string const& what)
        : Error("parse error at position " + std::to_string(position) + ": " + what),
          position(position) {}
    std::size_t position;
  };

}  // namespace semitop
