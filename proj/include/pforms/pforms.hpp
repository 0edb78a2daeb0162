#pragma once

// Umbrella header: exact exterior calculus on a global chart of R^n, chains
// with exact integration, geometric stress theory, and premetric p-form
// electrodynamics, over arbitrary-precision rational scalars.

#include "pforms/rational.hpp"
#include "pforms/multi_index.hpp"
#include "pforms/alt_tensor.hpp"
#include "pforms/polynomial.hpp"
#include "pforms/polyform.hpp"
#include "pforms/chains.hpp"
#include "pforms/mechanics.hpp"
#include "pforms/electrodynamics.hpp"
#include "pforms/random_gen.hpp"
#include "pforms/io.hpp"
#include "pforms/scenario.hpp"
