#pragma once

// Umbrella header for the MDI-QKD rate library.

#include "ratelab/bounds.hpp"
#include "ratelab/channel.hpp"
#include "ratelab/cv_model.hpp"
#include "ratelab/dv_model.hpp"
#include "ratelab/errors.hpp"
#include "ratelab/math.hpp"
#include "ratelab/optimizer.hpp"
#include "ratelab/sweep.hpp"
