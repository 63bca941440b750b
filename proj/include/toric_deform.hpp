#pragma once

// Umbrella header for the whole library.

#include "toric_deform/altmann.hpp"
#include "toric_deform/errors.hpp"
#include "toric_deform/graded.hpp"
#include "toric_deform/groebner.hpp"
#include "toric_deform/hulls.hpp"
#include "toric_deform/json_io.hpp"
#include "toric_deform/kmoduli.hpp"
#include "toric_deform/lattice.hpp"
#include "toric_deform/minkowski.hpp"
#include "toric_deform/polynomial.hpp"
#include "toric_deform/polytope3.hpp"
#include "toric_deform/rational.hpp"
#include "toric_deform/reference_examples.hpp"
