#pragma once

#include <stdexcept>
#include <string>

namespace mhrg {

// Board dimensions outside 1 <= m <= n.
class InvalidBoard : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A part sequence, index set, diagonal vector or box that does not fit the board.
class InvalidPosition : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The board has more partitions than the configured enumeration limit.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mhrg
