//
// efountain - finite E-Fountain semigroups, their categories and algebras
//
// This file contains the exception type thrown throughout the library.

#ifndef EFOUNTAIN_EXCEPTION_HPP_
#define EFOUNTAIN_EXCEPTION_HPP_

#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace efountain {

  //! Error categories reported by the library.
  enum class ErrorCode {
    out_of_range_entry,
    not_associative,
    size_limit,
    not_idempotent,
    not_regular,
    not_idempotent_in_e,
    invalid_e,
    not_reduced_e_fountain,
    congruence_condition_fails,
    domain_mismatch,
    budget_exceeded,
    search_budget_exceeded,
    basis_mismatch,
    dimension_mismatch,
    no_unit,
    wrong_characteristic,
    not_partial_order,
    not_inverse,
    parse_error,
    io_error
  };

  inline char const* to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::out_of_range_entry: return "OutOfRangeEntry";
      case ErrorCode::not_associative: return "NotAssociative";
      case ErrorCode::size_limit: return "SizeLimit";
      case ErrorCode::not_idempotent: return "NotIdempotent";
      case ErrorCode::not_regular: return "NotRegular";
      case ErrorCode::not_idempotent_in_e: return "NotIdempotentInE";
      case ErrorCode::invalid_e: return "InvalidE";
      case ErrorCode::not_reduced_e_fountain: return "NotReducedEFountain";
      case ErrorCode::congruence_condition_fails:
        return "CongruenceConditionFails";
      case ErrorCode::domain_mismatch: return "DomainMismatch";
      case ErrorCode::budget_exceeded: return "BudgetExceeded";
      case ErrorCode::search_budget_exceeded: return "SearchBudgetExceeded";
      case ErrorCode::basis_mismatch: return "BasisMismatch";
      case ErrorCode::dimension_mismatch: return "DimensionMismatch";
      case ErrorCode::no_unit: return "NoUnit";
      case ErrorCode::wrong_characteristic: return "WrongCharacteristic";
      case ErrorCode::not_partial_order: return "NotPartialOrder";
      case ErrorCode::not_inverse: return "NotInverse";
      case ErrorCode::parse_error: return "ParseError";
      case ErrorCode::io_error: return "IOError";
    }
    return "Unknown";
  }

  class Exception : public std::runtime_error {
   public:
    Exception(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

}  // namespace efountain

#endif  // EFOUNTAIN_EXCEPTION_HPP_
