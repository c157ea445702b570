#ifndef SLAM_ERRORS_HPP_
#define SLAM_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slam {

/// Failure while reading a line-oriented input; line numbers are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A label was looked up where a known lexeme was required.
class UnknownLexemeError : public std::runtime_error {
public:
    explicit UnknownLexemeError(std::string label)
        : std::runtime_error("unknown lexeme: " + label), label_(std::move(label)) {}

    const std::string& label() const noexcept { return label_; }

private:
    std::string label_;
};

}  // namespace slam

#endif  // SLAM_ERRORS_HPP_
