#pragma once

// Umbrella header.
#include "apg/apg_format.hpp"
#include "apg/board.hpp"
#include "apg/cnf.hpp"
#include "apg/core_ops.hpp"
#include "apg/error.hpp"
#include "apg/gadgets.hpp"
#include "apg/game.hpp"
#include "apg/outcome.hpp"
#include "apg/parallel.hpp"
#include "apg/poly22.hpp"
#include "apg/random.hpp"
#include "apg/reductions.hpp"
#include "apg/solver.hpp"
#include "apg/transposition.hpp"
#include "apg/transversal.hpp"
#include "apg/union_table.hpp"
#include "apg/verify.hpp"
#include "apg/vertex_set.hpp"
