#pragma once

#include "drcn/capacity.hpp"
#include "drcn/figure.hpp"
#include "drcn/network.hpp"
#include "drcn/optimizer.hpp"
#include "drcn/reference_data.hpp"
#include "drcn/sep_scheme.hpp"
#include "drcn/sim_scheme.hpp"
#include "drcn/sweep.hpp"
