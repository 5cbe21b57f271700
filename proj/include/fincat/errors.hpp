#ifndef FINCAT_ERRORS_HPP
#define FINCAT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fincat {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Kinds of structural violations reported by the validators.
enum class ViolationKind {
    DuplicateId,
    DanglingReference,
    MissingComposite,
    TypeMismatch,
    IdentityLawViolation,
    AssociativityViolation,
    NotFunctorial,
    IncompleteMap,
    UnknownCategory,
};

const char* to_string(ViolationKind kind);

/// One structural violation. `line` is 1-based when the description came
/// from a source document, 0 when built programmatically.
struct Violation {
    ViolationKind kind;
    std::string message;
    int line = 0;
};

/// Thrown by validate_category / validate_functor with the full list of
/// problems found; validation never stops at the first one.
class ValidationError : public Error {
public:
    ValidationError(std::string subject, std::vector<Violation> violations);

    const std::vector<Violation>& violations() const { return violations_; }
    const std::string& subject() const { return subject_; }

private:
    std::string subject_;
    std::vector<Violation> violations_;
};

/// Syntax error in a .cat/.fun document; line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(int line, int column, std::string expected, std::string found);

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    int line_;
    int column_;
    std::string expected_;
    std::string found_;
};

/// Lookup of an object, morphism, node or category id that does not exist.
struct UnknownId : Error {
    using Error::Error;
};

/// Composition requested for a non-composable pair (morphisms or path words).
struct NotComposable : Error {
    using Error::Error;
};

/// A path word whose letters do not chain, or whose letters are invalid.
struct MalformedWord : Error {
    using Error::Error;
};

/// Functor composition where the inner target is not the outer source.
struct SourceTargetMismatch : Error {
    using Error::Error;
};

/// trivial_factorization called on a non-trivial functor.
struct NotTrivial : Error {
    using Error::Error;
};

/// Enumeration search space above the configured cap.
struct BoundExceeded : Error {
    using Error::Error;
};

/// A checker's precondition does not hold (e.g. non-symmetric torsion probe).
struct PreconditionViolated : Error {
    using Error::Error;
};

/// gen_functor found no functor between the requested categories.
struct NoFunctorExists : Error {
    using Error::Error;
};

}  // namespace fincat

#endif
