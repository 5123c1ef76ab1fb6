#ifndef LMONOID_ERROR_HPP
#define LMONOID_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lmonoid {

  // Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed text input (algebra files, words, terms, congruences).
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // A search or enumeration would exceed its configured bound.
  class CapExceeded : public Error {
   public:
    CapExceeded(std::string const& what, std::size_t requested, std::size_t cap)
        : Error(what + ": " + std::to_string(requested) + " exceeds cap "
                + std::to_string(cap)),
          requested_(requested),
          cap_(cap) {}

    std::size_t requested() const noexcept {
      return requested_;
    }
    std::size_t cap() const noexcept {
      return cap_;
    }

   private:
    std::size_t requested_;
    std::size_t cap_;
  };

  // A position map handed to lift_embedding / verify code is not a witness.
  class InvalidWitness : public Error {
   public:
    using Error::Error;
  };

  class UnboundVariable : public Error {
   public:
    explicit UnboundVariable(std::size_t index)
        : Error("unbound variable x" + std::to_string(index)), index_(index) {}
    std::size_t index() const noexcept {
      return index_;
    }

   private:
    std::size_t index_;
  };

  class IncompatibleSpan : public Error {
   public:
    explicit IncompatibleSpan(std::size_t base_position)
        : Error("span restricts to a forbidden span at base position "
                + std::to_string(base_position)),
          position_(base_position) {}
    std::size_t position() const noexcept {
      return position_;
    }

   private:
    std::size_t position_;
  };

  class NotCommutative : public Error {
   public:
    using Error::Error;
  };

  class NoFiniteAxiom : public Error {
   public:
    using Error::Error;
  };

}  // namespace lmonoid

#endif  // LMONOID_ERROR_HPP
