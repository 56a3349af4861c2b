#pragma once

// Umbrella header for the pyrosim simulation library.

#include "pyrosim/config.hpp"
#include "pyrosim/csv.hpp"
#include "pyrosim/defaults.hpp"
#include "pyrosim/electrical.hpp"
#include "pyrosim/engine.hpp"
#include "pyrosim/errors.hpp"
#include "pyrosim/fitting.hpp"
#include "pyrosim/fluid.hpp"
#include "pyrosim/integrate.hpp"
#include "pyrosim/thermal.hpp"
#include "pyrosim/units.hpp"
