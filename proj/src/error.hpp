#pragma once

#include <stdexcept>
#include <string>

namespace mimkit {

/// Error categories; kept in sync with the mim_status codes of the C API.
enum class Status {
    Ok = 0,
    InvalidArgument = 1,
    Schema = 2,
    Mode = 3,
    Domain = 4,
    Capacity = 5,
    Parse = 6,
    Io = 7,
    Degenerate = 8,
    NullPointer = 9,
    Internal = 10,
};

const char* status_name(Status s);

class Error : public std::runtime_error {
public:
    Error(Status status, const std::string& message)
        : std::runtime_error(message), status_(status) {}

    Status status() const noexcept { return status_; }

private:
    Status status_;
};

[[noreturn]] inline void raise(Status status, const std::string& message) {
    throw Error(status, message);
}

} // namespace mimkit
