#pragma once

#include "sfpl/accumulator.hpp"
#include "sfpl/basis.hpp"
#include "sfpl/collocation.hpp"
#include "sfpl/config.hpp"
#include "sfpl/cost.hpp"
#include "sfpl/diagnostics.hpp"
#include "sfpl/errors.hpp"
#include "sfpl/expansion.hpp"
#include "sfpl/expr.hpp"
#include "sfpl/inference.hpp"
#include "sfpl/io.hpp"
#include "sfpl/linalg.hpp"
#include "sfpl/problems/dataset.hpp"
#include "sfpl/problems/michalewicz.hpp"
#include "sfpl/problems/mlp.hpp"
#include "sfpl/problems/robot_arm.hpp"
#include "sfpl/problems/xor_cost.hpp"
#include "sfpl/rng.hpp"
#include "sfpl/sampler.hpp"
#include "sfpl/search_space.hpp"
#include "sfpl/state.hpp"
