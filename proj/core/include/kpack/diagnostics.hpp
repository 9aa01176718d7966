#pragma once

#include <functional>
#include <string_view>

namespace kpack {

using WarningSink = std::function<void(std::string_view)>;

/// Routes a non-fatal warning to the installed sink (stderr by default).
void warn(std::string_view message);

/// Installs a new sink and returns the previous one. Thread-safe.
WarningSink set_warning_sink(WarningSink sink);

}  // namespace kpack
