#ifndef P3STAB_ERRORS_HPP
#define P3STAB_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace p3stab {

// All recoverable failures carry a stable machine-readable code; the CLI
// maps them to exit status 2 and a JSON error document.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message) {
    throw DomainError(std::move(code), message);
}

} // namespace p3stab

#endif
