#pragma once

// The two concrete elementary divisor domains the algorithms are instantiated for.
#include "matdiv/integer.hpp"
#include "matdiv/polynomial.hpp"
