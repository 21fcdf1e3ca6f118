#pragma once

#include "kgsym/arith/rational.hpp"
#include "kgsym/arith/rational_matrix.hpp"
#include "kgsym/arith/xy_poly.hpp"
#include "kgsym/cli/parse.hpp"
#include "kgsym/jet/free_jet.hpp"
#include "kgsym/jet/laurent.hpp"
#include "kgsym/jet/reduced_jet.hpp"
#include "kgsym/noether/noether.hpp"
#include "kgsym/opalg/td_operator.hpp"
#include "kgsym/symmetry/symmetry.hpp"
