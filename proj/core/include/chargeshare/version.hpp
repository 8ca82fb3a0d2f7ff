#pragma once

#include <string_view>

namespace chargeshare {

/// Project version plus `git describe` at configure time.
std::string_view version_string();

}  // namespace chargeshare
