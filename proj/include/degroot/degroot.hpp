#pragma once

// Umbrella header for the DeGroot opinion-pooling toolkit.
//
// The library analyzes iterated averaging procedures driven by a
// row-stochastic influence matrix: whether repeated pooling settles, what it
// settles to, and how the limit depends on the communication digraph. It
// also runs the construction in the other direction, synthesizing a
// Hamiltonian cycle with loops whose pooling limit matches any prescribed
// positive weight distribution.

#include "degroot/errors.hpp"
#include "degroot/matrix.hpp"
#include "degroot/stochastic.hpp"
#include "degroot/digraph.hpp"
#include "degroot/stationary.hpp"
#include "degroot/forests.hpp"
#include "degroot/cycle.hpp"
#include "degroot/io.hpp"
