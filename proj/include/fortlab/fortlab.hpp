#pragma once

/* Umbrella header: graphs, zero forcing, minimal forts, graph products,
   counting formulas, and the policy knobs that cap the exponential parts. */

#include "bigint.hpp"
#include "errors.hpp"
#include "families.hpp"
#include "formulas.hpp"
#include "fort_cover.hpp"
#include "forts.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "policy.hpp"
#include "products.hpp"
#include "vertex_set.hpp"
#include "zero_forcing.hpp"
