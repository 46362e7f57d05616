#pragma once

#include <string>

namespace vesicle {

/// "vesicle <git describe>", fixed at configure time.
std::string version();

}  // namespace vesicle
