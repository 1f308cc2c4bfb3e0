// cavityqfi.hpp — Umbrella header

#pragma once

#include "cavityqfi/params.hpp"
#include "cavityqfi/kernels.hpp"
#include "cavityqfi/dynamics.hpp"
#include "cavityqfi/tcl.hpp"
#include "cavityqfi/qfi.hpp"
#include "cavityqfi/io.hpp"
#include "cavityqfi/svg.hpp"
#include "cavityqfi/scenario.hpp"
#include "cavityqfi/validation.hpp"
