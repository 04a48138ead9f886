#pragma once

#include <stdexcept>
#include <string>

namespace scmine {

// Base for all toolkit errors. Subclasses distinguish validation
// failures (bad input data, exit code 2) from I/O failures (exit code 1).
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct validation_error : error {
    using error::error;
};

struct io_error : error {
    using error::error;
};

struct parse_error : validation_error {
    using validation_error::validation_error;
};

struct insufficient_frames_error : validation_error {
    using validation_error::validation_error;
};

struct undefined_similarity_error : validation_error {
    using validation_error::validation_error;
};

struct empty_document_error : validation_error {
    using validation_error::validation_error;
};

} // namespace scmine
