#pragma once

#include <optional>
#include <string_view>

namespace artmod {

enum class Label { safe, unsafe };

constexpr std::string_view to_string(Label l) noexcept { return l == Label::safe ? "safe" : "unsafe"; }

constexpr std::optional<Label> parse_label(std::string_view s) noexcept {
    if (s == "safe") return Label::safe;
    if (s == "unsafe") return Label::unsafe;
    return std::nullopt;
}

}  // namespace artmod
