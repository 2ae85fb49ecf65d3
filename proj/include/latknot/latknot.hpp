#pragma once

#include "latknot/arc_presentation.hpp"
#include "latknot/certify.hpp"
#include "latknot/dataset.hpp"
#include "latknot/diagram.hpp"
#include "latknot/error.hpp"
#include "latknot/generate.hpp"
#include "latknot/invariants.hpp"
#include "latknot/io.hpp"
#include "latknot/lattice.hpp"
#include "latknot/laurent.hpp"
