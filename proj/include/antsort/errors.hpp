#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace antsort {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// API misuse by the caller (duplicate heap insert, self-comparison, ...).
struct UsageError : Error {
    using Error::Error;
};

// Instance data is structurally invalid (non-monotone table, unreachable
// vertex, non-chordal graph, malformed constraint).
struct InputError : Error {
    using Error::Error;
};

// A brute-force operation was asked to run past its size limit.
struct LimitError : Error {
    using Error::Error;
};

// A candidate structure broke its reporting contract.
struct ContractError : Error {
    using Error::Error;
};

// A sort run got stuck: no element available, yet elements remain.
struct StallError : Error {
    std::vector<int> prefix;  // what was emitted before the stall
    StallError(const std::string& msg, std::vector<int> p)
        : Error(msg), prefix(std::move(p)) {}
};

// Instance text could not be parsed.
struct ParseError : Error {
    int line;
    ParseError(const std::string& msg, int line_) : Error(msg), line(line_) {}
};

// The comparison oracle and the candidate structure disagree about order;
// one of the two is lying (or the hidden order is not in P).
struct MismatchError : Error {
    using Error::Error;
};

}  // namespace antsort
