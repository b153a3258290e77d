#pragma once

// Umbrella header for the exact coincidence-symmetry library.

#include "csl/census.hpp"
#include "csl/coincidence.hpp"
#include "csl/errors.hpp"
#include "csl/field.hpp"
#include "csl/int_matrix.hpp"
#include "csl/lattice.hpp"
#include "csl/matrix.hpp"
#include "csl/numeric.hpp"
#include "csl/planar.hpp"
#include "csl/reflection.hpp"
#include "csl/text.hpp"
