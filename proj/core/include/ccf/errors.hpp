#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace ccf {

// Malformed input text (instance files, partition files, cover files).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// A solver was asked to run outside its stated preconditions
// (oracle size limit, weighted input to the kernel, ...).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// A deadline expired inside a solver loop.
struct TimeoutError : std::runtime_error {
    explicit TimeoutError(const std::string& msg) : std::runtime_error(msg) {}
};

// Optional wall-clock budget checked cooperatively inside solver loops.
class Deadline {
public:
    Deadline() = default;

    static Deadline after(std::chrono::milliseconds budget) {
        Deadline d;
        d.at_ = std::chrono::steady_clock::now() + budget;
        return d;
    }

    bool expired() const {
        return at_ && std::chrono::steady_clock::now() >= *at_;
    }

    void check(const char* where) const {
        if (expired()) throw TimeoutError(std::string("timeout in ") + where);
    }

private:
    std::optional<std::chrono::steady_clock::time_point> at_;
};

}  // namespace ccf
