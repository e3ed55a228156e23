#pragma once

#include "entwidth/analytic.hpp"
#include "entwidth/bipartition.hpp"
#include "entwidth/cluster.hpp"
#include "entwidth/decomposition.hpp"
#include "entwidth/gaussian.hpp"
#include "entwidth/graph.hpp"
#include "entwidth/graph_io.hpp"
#include "entwidth/measures.hpp"
#include "entwidth/parallel.hpp"
#include "entwidth/width.hpp"
