#pragma once

#include "gph/error.hpp"
#include "gph/permutation.hpp"
#include "gph/graph.hpp"
#include "gph/permgroup.hpp"
#include "gph/graph_symmetry.hpp"
#include "gph/poset.hpp"
#include "gph/graphicahedron.hpp"
#include "gph/symmetry.hpp"
#include "gph/presentation.hpp"
#include "gph/star_group.hpp"
#include "gph/affine_coxeter.hpp"
#include "gph/torus.hpp"
