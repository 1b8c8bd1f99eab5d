#pragma once

#include "gft/class_kernel.hpp"
#include "gft/complex.hpp"
#include "gft/conic.hpp"
#include "gft/errors.hpp"
#include "gft/io.hpp"
#include "gft/neighborhood.hpp"
#include "gft/operator.hpp"
#include "gft/partial_sums.hpp"
#include "gft/rng.hpp"
#include "gft/series.hpp"
#include "gft/verifier.hpp"
