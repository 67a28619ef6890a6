#pragma once

#include <stdexcept>
#include <string>

namespace rcsim {

// Raised when a text input (edge list, config file) cannot be parsed.
// line == 0 means the error is not tied to a specific line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : std::runtime_error(format(source, line, what)), source_(source), line_(line) {}

    const std::string& source() const { return source_; }
    std::size_t line() const { return line_; }

private:
    static std::string format(const std::string& source, std::size_t line,
                              const std::string& what) {
        if (line == 0) return source + ": " + what;
        return source + ":" + std::to_string(line) + ": " + what;
    }
    std::string source_;
    std::size_t line_;
};

// Raised when the integrator detects a state-invariant violation larger than
// the roundoff tolerance. Carries the time at which the violation occurred;
// usually means the step size is too large for the given rates.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(double time, const std::string& what)
        : std::runtime_error("t=" + std::to_string(time) + ": " + what), time_(time) {}

    double time() const { return time_; }

private:
    double time_;
};

}  // namespace rcsim
