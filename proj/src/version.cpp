#include "vesicle/version.hpp"

#ifndef VESICLE_GIT_REV
#define VESICLE_GIT_REV "unknown"
#endif

namespace vesicle {

std::string version() { return std::string("vesicle ") + VESICLE_GIT_REV; }

}  // namespace vesicle
