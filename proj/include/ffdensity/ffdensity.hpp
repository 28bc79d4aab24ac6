#pragma once

// Umbrella header: densities of algebraic events over global function
// fields, computed three ways (exact products, truncated local products
// with certified bounds, and exhaustive or sampled counting over
// Riemann-Roch boxes) so the routes can be checked against each other.

#include "rational.hpp"
#include "rng.hpp"
#include "gf.hpp"
#include "polyring.hpp"
#include "places.hpp"
#include "holomorphy.hpp"
#include "eisenstein.hpp"
#include "zeta.hpp"
#include "unimodular.hpp"
#include "density.hpp"
#include "textio.hpp"
