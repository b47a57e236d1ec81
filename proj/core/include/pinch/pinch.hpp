#pragma once

#include "pinch/allocator.hpp"
#include "pinch/config.hpp"
#include "pinch/error.hpp"
#include "pinch/experiments.hpp"
#include "pinch/geometry.hpp"
#include "pinch/optimizer.hpp"
#include "pinch/oracle.hpp"
#include "pinch/scenario.hpp"
