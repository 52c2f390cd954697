#pragma once

#include "errors.hpp"
#include "rng.hpp"
#include "spectrum_model.hpp"
#include "spectrum_io.hpp"
#include "tracy_widom.hpp"
#include "lawley_bias.hpp"
#include "shrinkage.hpp"
#include "rmt_estimator.hpp"
#include "ls_rmt_estimator.hpp"
#include "error_analysis.hpp"
#include "mc_harness.hpp"
