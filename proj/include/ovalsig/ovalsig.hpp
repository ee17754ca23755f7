#pragma once

// Umbrella header: signature and nullity invariants of complex schemes of
// real plane curves, computed through plumbing diagrams.

#include "casson_gordon.hpp"
#include "char_data.hpp"
#include "errors.hpp"
#include "invariants.hpp"
#include "matrix.hpp"
#include "numeric.hpp"
#include "plumbing.hpp"
#include "prohibition.hpp"
#include "scheme.hpp"
