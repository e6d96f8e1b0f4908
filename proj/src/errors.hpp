#pragma once

#include <stdexcept>

namespace periodica {

// Error taxonomy shared by the core library and surfaced through the C API.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_argument_error : error { using error::error; };
struct parity_error : error { using error::error; };
struct divergent_series_error : error { using error::error; };
struct degenerate_parameters_error : error { using error::error; };
struct parse_error : error { using error::error; };

} // namespace periodica
