#pragma once

#include "bergman/basis.hpp"
#include "bergman/domain.hpp"
#include "bergman/integrate.hpp"
#include "bergman/kernels.hpp"
#include "bergman/lp_analysis.hpp"
#include "bergman/projection.hpp"
#include "bergman/rational.hpp"
#include "bergman/rng.hpp"
#include "bergman/sampling.hpp"
#include "bergman/serialize.hpp"
