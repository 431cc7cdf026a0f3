#ifndef TWOLEVEL_TWOLEVEL_HPP
#define TWOLEVEL_TWOLEVEL_HPP

#include "core.hpp"
#include "diagnostics.hpp"
#include "ep.hpp"
#include "golden_section.hpp"
#include "scenario.hpp"
#include "sweep.hpp"
#include "types.hpp"
#include "validate.hpp"

#endif  // TWOLEVEL_TWOLEVEL_HPP
