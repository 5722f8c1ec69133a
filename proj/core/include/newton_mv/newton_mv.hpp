#pragma once

#include "newton_mv/errors.hpp"
#include "newton_mv/lattice_geometry.hpp"
#include "newton_mv/mixed_volume.hpp"
#include "newton_mv/rational.hpp"
#include "newton_mv/sampling.hpp"
#include "newton_mv/sparse_solver.hpp"
#include "newton_mv/support_semigroup.hpp"
#include "newton_mv/virtual_polytope.hpp"
