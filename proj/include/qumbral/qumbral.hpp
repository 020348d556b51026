#pragma once

// Umbrella header for the qumbral library: exact rational Q-umbral calculus
// on polynomials — generalized differential operators, psi-basic sequences,
// the star product, Q-integration, and the Bernoulli-Taylor expansion with
// its Cauchy-type rest term.

#include "basis.hpp"
#include "context.hpp"
#include "errors.hpp"
#include "integral.hpp"
#include "io.hpp"
#include "parse.hpp"
#include "poly.hpp"
#include "presets.hpp"
#include "psi.hpp"
#include "rational.hpp"
#include "rng.hpp"
#include "taylor.hpp"
#include "verify.hpp"
