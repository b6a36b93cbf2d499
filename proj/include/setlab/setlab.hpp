#pragma once

#include "setlab/cards.hpp"
#include "setlab/cnf.hpp"
#include "setlab/domination.hpp"
#include "setlab/games.hpp"
#include "setlab/hypergraph.hpp"
#include "setlab/io.hpp"
#include "setlab/oracles.hpp"
#include "setlab/packing.hpp"
#include "setlab/pmdm.hpp"
#include "setlab/verify.hpp"
