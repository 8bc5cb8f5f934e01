#include "proofleg/errors.hpp"

namespace proofleg {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::OutOfRangeVertex: return "OutOfRangeVertex";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::OrderNotTopological: return "OrderNotTopological";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::NotHPartition: return "NotHPartition";
    case Errc::QuotientCyclic: return "QuotientCyclic";
    case Errc::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case Errc::ScaleCapExceeded: return "ScaleCapExceeded";
    case Errc::SelfLoopInInput: return "SelfLoopInInput";
    case Errc::DegreePreconditionViolated: return "DegreePreconditionViolated";
    case Errc::NotFeedbackArcSet: return "NotFeedbackArcSet";
    case Errc::GadgetNotWellOriented: return "GadgetNotWellOriented";
    case Errc::NotACover: return "NotACover";
    case Errc::NoThesisVertex: return "NoThesisVertex";
    case Errc::ReferenceCapExceeded: return "ReferenceCapExceeded";
    case Errc::MalformedScript: return "MalformedScript";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::InternalInvariantViolation: return "InternalInvariantViolation";
    case Errc::IoError: return "IoError";
    }
    return "UnknownError";
}

static std::string format_message(Errc c, const std::string& what, int line) {
    std::string out = errc_name(c);
    if (line > 0) {
        out += " at line ";
        out += std::to_string(line);
    }
    if (!what.empty()) {
        out += ": ";
        out += what;
    }
    return out;
}

Error::Error(Errc code, const std::string& what, int line)
    : std::runtime_error(format_message(code, what, line)), code_(code), line_(line) {}

void fail(Errc code, const std::string& what, int line) {
    throw Error(code, what, line);
}

} // namespace proofleg
