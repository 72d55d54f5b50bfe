#pragma once

#include "toeplab/bergman.hpp"
#include "toeplab/bounds.hpp"
#include "toeplab/errors.hpp"
#include "toeplab/hardy.hpp"
#include "toeplab/laurent.hpp"
#include "toeplab/numerics.hpp"
#include "toeplab/polydisc.hpp"
#include "toeplab/spectral.hpp"

namespace toeplab {

inline constexpr const char* kVersion = TOEPLAB_VERSION_STRING;

}  // namespace toeplab
