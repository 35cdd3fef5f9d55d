#include "cliffs/error.hpp"

namespace cliffs {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidIndex: return "InvalidIndex";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::InvalidCliff: return "InvalidCliff";
        case ErrorKind::UnsupportedRangeMap: return "UnsupportedRangeMap";
        case ErrorKind::SizeMismatch: return "SizeMismatch";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::NotComparable: return "NotComparable";
        case ErrorKind::NotNested: return "NotNested";
        case ErrorKind::FlagMissing: return "FlagMissing";
        case ErrorKind::NotInImage: return "NotInImage";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::InvalidPath: return "InvalidPath";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::DomainViolation: return "DomainViolation";
        case ErrorKind::NotValleyFree: return "NotValleyFree";
    }
    return "Error";
}

}  // namespace cliffs
