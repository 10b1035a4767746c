#pragma once

// Convenience umbrella for the whole library.

#include "bas/bench.hpp"
#include "bas/board.hpp"
#include "bas/generator.hpp"
#include "bas/kernel.hpp"
#include "bas/solver.hpp"
