#ifndef PROOFLEG_ERRORS_HPP
#define PROOFLEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace proofleg {

// Machine-checkable failure conditions raised by the library.
enum class Errc {
    CycleDetected,
    OutOfRangeVertex,
    SelfLoop,
    OrderNotTopological,
    NotAPartition,
    NotHPartition,
    QuotientCyclic,
    EnumerationCapExceeded,
    ScaleCapExceeded,
    SelfLoopInInput,
    DegreePreconditionViolated,
    NotFeedbackArcSet,
    GadgetNotWellOriented,
    NotACover,
    NoThesisVertex,
    ReferenceCapExceeded,
    MalformedScript,
    SyntaxError,
    UnknownLabel,
    DuplicateLabel,
    InternalInvariantViolation,
    IoError,
};

const char* errc_name(Errc code);

// All library errors are thrown as Error. Parse errors from the text
// front ends carry the 1-based line number of the offending line.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message, int line = 0);

    Errc code() const { return code_; }
    int line() const { return line_; }

private:
    Errc code_;
    int line_;
};

[[noreturn]] void fail(Errc code, const std::string& message, int line = 0);

} // namespace proofleg

#endif
