// Umbrella header: the whole library.

#ifndef RESGRAPH_RESGRAPH_HPP
#define RESGRAPH_RESGRAPH_HPP

#include "resgraph/blowup.hpp"
#include "resgraph/classify.hpp"
#include "resgraph/cli.hpp"
#include "resgraph/cycles.hpp"
#include "resgraph/errors.hpp"
#include "resgraph/graph.hpp"
#include "resgraph/io.hpp"
#include "resgraph/linalg.hpp"
#include "resgraph/rational.hpp"
#include "resgraph/topology.hpp"

#endif  // RESGRAPH_RESGRAPH_HPP
