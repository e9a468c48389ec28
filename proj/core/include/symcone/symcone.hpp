#pragma once

#include "symcone/algebra.hpp"
#include "symcone/error.hpp"
#include "symcone/geometry.hpp"
#include "symcone/json_io.hpp"
#include "symcone/metrics.hpp"
#include "symcone/morphisms.hpp"
#include "symcone/projections.hpp"
#include "symcone/random.hpp"
#include "symcone/spectral.hpp"
