#pragma once

#include "dpt/catalog.hpp"
#include "dpt/compound.hpp"
#include "dpt/diagram.hpp"
#include "dpt/direction.hpp"
#include "dpt/fuzz.hpp"
#include "dpt/io.hpp"
#include "dpt/isomorphism.hpp"
#include "dpt/lattice.hpp"
#include "dpt/moves.hpp"
#include "dpt/report.hpp"
#include "dpt/svg.hpp"
#include "dpt/trace.hpp"
#include "dpt/wrap.hpp"
