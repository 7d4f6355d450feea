#pragma once

// Umbrella header for the numerical-semigroup library (everything except the
// command-line front end, which lives in numsemi/cli.hpp).

#include "numsemi/apery.hpp"
#include "numsemi/base.hpp"
#include "numsemi/core.hpp"
#include "numsemi/enumerator.hpp"
#include "numsemi/errors.hpp"
#include "numsemi/generators.hpp"
