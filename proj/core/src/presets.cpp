#include "otto/presets.hpp"

#include <string>

#include "otto/error.hpp"
#include "preset_data.hpp"

namespace otto {

std::vector<std::string_view> preset_names() {
    std::vector<std::string_view> names;
    for (const auto& [name, text] : detail::kPresetFiles) {
        names.push_back(name);
    }
    return names;
}

std::optional<std::string_view> preset_text(std::string_view name) noexcept {
    for (const auto& [known, text] : detail::kPresetFiles) {
        if (known == name) {
            return text;
        }
    }
    return std::nullopt;
}

std::vector<std::string_view> figure_presets(int figure) {
    switch (figure) {
        case 3:
            return {"fig3"};
        case 4:
            return {"fig4_hot", "fig4_cold"};
        case 5:
            return {"fig5"};
        default:
            throw RangeError("no preset for figure " + std::to_string(figure) + " (expected 3, 4 or 5)");
    }
}

}  // namespace otto
