#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace otto {

/// Names of the built-in configs: fig3, fig4_hot, fig4_cold, fig5.
[[nodiscard]] std::vector<std::string_view> preset_names();

/// Config text of a built-in preset.
[[nodiscard]] std::optional<std::string_view> preset_text(std::string_view name) noexcept;

/// Presets making up one figure, in output order. Figure 4 has a hot-speed
/// and a cold-speed scan. Throws RangeError for figures other than 3, 4, 5.
[[nodiscard]] std::vector<std::string_view> figure_presets(int figure);

}  // namespace otto
