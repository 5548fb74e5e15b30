#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace termalg {

enum class Direction { forward, reverse };

inline Direction flip(Direction d) noexcept {
    return d == Direction::forward ? Direction::reverse : Direction::forward;
}
inline std::string_view to_string(Direction d) noexcept { return d == Direction::forward ? "fwd" : "rev"; }

// Outcome of replaying a certificate.
struct ReplayResult {
    bool ok = true;
    // Index of the first step that did not apply; equal to the step count when
    // every step applied but the final term differs from the target.
    std::optional<std::size_t> failed_step;
    std::string message;

    explicit operator bool() const noexcept { return ok; }
};

} // namespace termalg
