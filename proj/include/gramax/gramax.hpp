#pragma once

#include "gramax/error.hpp"
#include "gramax/io.hpp"
#include "gramax/linops.hpp"
#include "gramax/networks.hpp"
#include "gramax/objective.hpp"
#include "gramax/optimizer.hpp"
#include "gramax/projections.hpp"
#include "gramax/svg.hpp"
#include "gramax/sweep.hpp"
