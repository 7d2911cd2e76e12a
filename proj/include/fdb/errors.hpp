#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fdb {

// Thrown when an exhaustive enumeration would exceed its configured size limit.
class guard_exceeded : public std::runtime_error {
public:
    guard_exceeded(const std::string& what, std::size_t requested, std::size_t limit)
        : std::runtime_error(what), requested_(requested), limit_(limit)
    {
    }

    std::size_t requested() const noexcept { return requested_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t requested_;
    std::size_t limit_;
};

// A multiset partition that does not sum to the multiset it is paired with.
class invalid_partition : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Faa di Bruno index vector violating sum_j j * m_j = k.
class invalid_signature : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Moment or cumulant assignment lacking a value the computation needs.
class incomplete_assignment : public std::runtime_error {
public:
    incomplete_assignment(const std::string& what, std::string missing_key)
        : std::runtime_error(what), missing_key_(std::move(missing_key))
    {
    }

    const std::string& missing_key() const noexcept { return missing_key_; }

private:
    std::string missing_key_;
};

// Malformed textual input; position is the 0-based character offset.
class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position)
    {
    }

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace fdb
