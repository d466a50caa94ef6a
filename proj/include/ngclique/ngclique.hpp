#pragma once

// Umbrella header.

#include "ngclique/bounds.hpp"
#include "ngclique/coloring_io.hpp"
#include "ngclique/compression.hpp"
#include "ngclique/counting.hpp"
#include "ngclique/graph.hpp"
#include "ngclique/graph6.hpp"
#include "ngclique/multicolor.hpp"
#include "ngclique/numeric.hpp"
#include "ngclique/packing.hpp"
#include "ngclique/random.hpp"
#include "ngclique/search.hpp"
#include "ngclique/threshold.hpp"
