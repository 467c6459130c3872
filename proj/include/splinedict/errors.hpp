#pragma once

#include <stdexcept>
#include <string>

namespace splinedict {

enum class errc {
    non_increasing,
    too_few_points,
    non_divisible,
    bad_count,
    endpoint_mismatch,
    union_mismatch,
    index_out_of_range,
    x_out_of_domain,
    signal_too_short,
    parse_error,
    io_failure,
};

const char* errc_name(errc code) noexcept;

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace splinedict
