#pragma once

#include "imax/bigint.hpp"
#include "imax/bounds.hpp"
#include "imax/canonical.hpp"
#include "imax/census.hpp"
#include "imax/checks.hpp"
#include "imax/constructions.hpp"
#include "imax/errors.hpp"
#include "imax/graph.hpp"
#include "imax/graph6.hpp"
#include "imax/invariants.hpp"
#include "imax/matrix.hpp"
#include "imax/mis.hpp"
#include "imax/parallel.hpp"
#include "imax/random.hpp"
#include "imax/setfamily.hpp"
#include "imax/small_graphs.hpp"
#include "imax/trees.hpp"
#include "imax/vertex_set.hpp"
#include "imax/wilf.hpp"
