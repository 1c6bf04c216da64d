#pragma once

#include "ramsey_loops/billiard.hpp"
#include "ramsey_loops/coloring.hpp"
#include "ramsey_loops/contour.hpp"
#include "ramsey_loops/error.hpp"
#include "ramsey_loops/geometry.hpp"
#include "ramsey_loops/ramsey.hpp"
#include "ramsey_loops/regions.hpp"
#include "ramsey_loops/render.hpp"
