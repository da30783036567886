#pragma once

#include "complexity.hpp"
#include "discrepancy.hpp"
#include "errors.hpp"
#include "generators.hpp"
#include "point_set.hpp"
#include "points_io.hpp"
#include "report.hpp"
#include "rng.hpp"
#include "verify.hpp"
#include "witness.hpp"
