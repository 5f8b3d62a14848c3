#pragma once

#include "satnum/canonical.hpp"
#include "satnum/constructions.hpp"
#include "satnum/containment.hpp"
#include "satnum/cycle_lemmas.hpp"
#include "satnum/discharging.hpp"
#include "satnum/enumerate.hpp"
#include "satnum/errors.hpp"
#include "satnum/exact_solver.hpp"
#include "satnum/graph.hpp"
#include "satnum/graph_io.hpp"
#include "satnum/multipartite.hpp"
#include "satnum/parallel.hpp"
#include "satnum/path_search.hpp"
#include "satnum/pattern.hpp"
#include "satnum/rational.hpp"
#include "satnum/saturation.hpp"
#include "satnum/upper_bounds.hpp"
#include "satnum/vertex_set.hpp"

namespace satnum {
inline constexpr const char* kToolkitVersion = "0.1.0";
}
