#pragma once

#include <stdexcept>
#include <string>

namespace cospec {

// Error taxonomy shared by the library and the CLI exit-code mapping.
struct config_error : std::runtime_error {
    int line = -1;
    explicit config_error(const std::string& msg, int line_no = -1)
        : std::runtime_error(msg), line(line_no) {}
};

struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parameter_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct oracle_undecidable_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct empty_result_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct truncation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct reversibility_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct kernel_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cospec
