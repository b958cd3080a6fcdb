#ifndef AGC_ERROR_HPP
#define AGC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace agc {

/// Violated precondition or malformed input. CLI maps these to exit code 2.
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Broken internal invariant (a bug, not a user error). CLI maps these to exit code 3.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw precondition_error(msg);
}

inline void check_internal(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

} // namespace agc

#endif
