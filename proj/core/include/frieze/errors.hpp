#pragma once

#include <stdexcept>
#include <string>

namespace frieze {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A literal does not parse in the domain's grammar.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Operands from different coefficient domains were mixed, or a value
/// was used with a subset/domain it does not belong to.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A cycle or summand violates a length precondition.
class LengthError : public Error {
public:
    using Error::Error;
};

/// zero_contract was pointed at an entry that is not zero.
class NotZeroError : public Error {
public:
    using Error::Error;
};

/// split_at_unit was pointed at a frieze entry that is not 1 or -1.
class NotUnitError : public Error {
public:
    using Error::Error;
};

/// An index is outside its valid range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// A sequence failed the eta-product verification.
class NotACycleError : public Error {
public:
    using Error::Error;
};

/// A decomposition tree is structurally inconsistent.
class MalformedTreeError : public Error {
public:
    using Error::Error;
};

/// An enumeration candidate is not a member of the governing subset.
class MembershipError : public Error {
public:
    using Error::Error;
};

} // namespace frieze
