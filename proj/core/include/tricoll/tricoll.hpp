#pragma once

#include "tricoll/control_ops.hpp"
#include "tricoll/errors.hpp"
#include "tricoll/grid.hpp"
#include "tricoll/hamiltonian.hpp"
#include "tricoll/io.hpp"
#include "tricoll/model.hpp"
#include "tricoll/propagation.hpp"
#include "tricoll/spectrum.hpp"
