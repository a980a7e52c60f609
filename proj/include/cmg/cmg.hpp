#pragma once

#include "cmg/bounds.hpp"
#include "cmg/canonical.hpp"
#include "cmg/clique_solver.hpp"
#include "cmg/cliques.hpp"
#include "cmg/enumerate.hpp"
#include "cmg/homomorphism.hpp"
#include "cmg/io.hpp"
#include "cmg/mixed_graph.hpp"
#include "cmg/named_graphs.hpp"
#include "cmg/parallel.hpp"
#include "cmg/relations.hpp"
#include "cmg/search.hpp"
#include "cmg/simple_graph.hpp"
