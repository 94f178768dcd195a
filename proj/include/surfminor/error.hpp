#pragma once

#include <stdexcept>
#include <string>

namespace surfminor {

// Rejected input: a precondition failed. The message names the offending id.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed serialized data; offset is the byte position where parsing stopped.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace surfminor
