#pragma once

#include <stdexcept>
#include <string>

namespace ribet {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// core arithmetic
struct MismatchedField : Error { using Error::Error; };
struct DenominatorDivisibleByP : Error { using Error::Error; };
struct PrecisionExhausted : Error { using Error::Error; };
struct NonUnitDivisor : Error { using Error::Error; };
struct NotDivisibleByP : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };

// bernoulli
struct IndexOutOfRange : Error { using Error::Error; };

// characters
struct TrivialCharacter : Error { using Error::Error; };
struct InternalInconsistency : Error { using Error::Error; };

// q-expansions
struct GradingMismatch : Error { using Error::Error; };
struct PrecisionTooLow : Error { using Error::Error; };
struct TruncationTooShort : Error { using Error::Error; };

// eisenstein
struct BadCharacterParity : Error { using Error::Error; };
struct EmbeddingFailure : Error { using Error::Error; };
struct CaseThreeViolation : Error { using Error::Error; };

// pipeline
struct InputNotIrregular : Error { using Error::Error; };
struct NoWitnessFound : Error { using Error::Error; };

} // namespace ribet
