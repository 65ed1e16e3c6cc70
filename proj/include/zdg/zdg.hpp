#pragma once

#include "zdg/catalog.hpp"
#include "zdg/config.hpp"
#include "zdg/graph.hpp"
#include "zdg/mdim.hpp"
#include "zdg/ring.hpp"
#include "zdg/ringexpr.hpp"
#include "zdg/zdg_lab.hpp"
