// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <stdexcept>
#include <string>
#include <utility>

namespace autoseq {

// Domain error carrying the module that raised it; what() reads
// "module: message".
class Error : public std::runtime_error {
public:
    Error(std::string module, const std::string& message)
        : std::runtime_error(module + ": " + message), module_(std::move(module)) {}

    const std::string& module() const noexcept { return module_; }

private:
    std::string module_;
};

// Syntax error in an input file, with a 1-based line number.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& message)
        : Error("parse", "line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// A computation exceeded a configured size bound.
class SizeError : public Error {
public:
    SizeError(std::string module, const std::string& message)
        : Error(std::move(module), message) {}
};

class CancelledError : public Error {
public:
    CancelledError() : Error("cancel", "operation cancelled") {}
};

// Cooperative cancellation for long-running exact solves.  The worker polls
// the token between elimination steps; cancel() may be called from any
// thread.
class CancelToken {
public:
    void cancel() noexcept { flag_.store(true, std::memory_order_relaxed); }
    bool cancelled() const noexcept { return flag_.load(std::memory_order_relaxed); }

    void poll() const {
        if (cancelled()) throw CancelledError();
    }

private:
    std::atomic<bool> flag_{false};
};

inline void poll_cancel(const CancelToken* token) {
    if (token) token->poll();
}

} // namespace autoseq
