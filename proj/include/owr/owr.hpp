#pragma once
// Umbrella header for the watchman-route library.

#include "owr/balanced.hpp"
#include "owr/decomposition.hpp"
#include "owr/error.hpp"
#include "owr/io.hpp"
#include "owr/oracle.hpp"
#include "owr/path_polygon.hpp"
#include "owr/point.hpp"
#include "owr/polygen.hpp"
#include "owr/polygon.hpp"
#include "owr/rational.hpp"
#include "owr/rects.hpp"
#include "owr/route.hpp"
#include "owr/svg.hpp"
