#pragma once

#include <stdexcept>
#include <string>

namespace rotcost {

/// Raised when a formula is evaluated outside its validity region
/// (e.g. the logical error fit above the surface code threshold).
struct ModelRangeError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised when a fit is requested with too little data.
struct InsufficientDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an operation would exceed a configured work ceiling.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised by file ingestion on malformed input; carries the line number.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line(line) {}
    int line;
};

/// Raised when an imported record fails revalidation.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rotcost
