#pragma once

#include <stdexcept>
#include <string>

namespace cbkit {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define CBKIT_ERROR_TYPE(Name)                                                 \
    class Name : public Error {                                                \
    public:                                                                    \
        using Error::Error;                                                    \
    }

CBKIT_ERROR_TYPE(AllZeroCoordinates);
CBKIT_ERROR_TYPE(DimensionMismatch);
CBKIT_ERROR_TYPE(DuplicatePoint);
CBKIT_ERROR_TYPE(IndexOutOfRange);
CBKIT_ERROR_TYPE(WrongAmbientDimension);
CBKIT_ERROR_TYPE(SearchCapExceeded);
CBKIT_ERROR_TYPE(BudgetExceeded);
CBKIT_ERROR_TYPE(DegenerateLineConfiguration);
CBKIT_ERROR_TYPE(NotSingular);
CBKIT_ERROR_TYPE(CharacteristicTwo);
CBKIT_ERROR_TYPE(GenericityFailure);
CBKIT_ERROR_TYPE(RetriesExhausted);
CBKIT_ERROR_TYPE(ConfigError);

#undef CBKIT_ERROR_TYPE

/// Parse failures carry the 1-based line number of the offending input.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace cbkit
