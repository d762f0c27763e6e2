#pragma once

// Everything except the CLI glue.
#include "dlcombi/dl.hpp"
#include "dlcombi/fixed_points.hpp"
#include "dlcombi/oracle.hpp"
#include "dlcombi/quasi_isolated.hpp"
#include "dlcombi/verify.hpp"
