#ifndef TEAMSEM_ERROR_HPP
#define TEAMSEM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace teamsem {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised by the formula parser; `position` is a byte offset into the input.
class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t position)
        : Error(std::move(message)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A requested enumeration exceeds the supported signature sizes.
class CapacityError : public Error {
public:
    using Error::Error;
};

// Input violates an operation precondition (domain mismatch, wrong logic,
// malformed model shape, non-System-C table, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Formula synthesis ran out of its candidate budget.
class BudgetExhausted : public Error {
public:
    BudgetExhausted(std::string message, std::uint64_t generated)
        : Error(std::move(message)), generated_(generated) {}
    std::uint64_t generated() const noexcept { return generated_; }

private:
    std::uint64_t generated_;
};

}  // namespace teamsem

#endif  // TEAMSEM_ERROR_HPP
