#pragma once

// Everything except the command line.

#include "circuit.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "io_formats.hpp"
#include "lipschitz.hpp"
#include "matching.hpp"
#include "reachability.hpp"
#include "reductions.hpp"
#include "rng.hpp"
#include "stable_marriage.hpp"
#include "tri.hpp"
#include "universal.hpp"
#include "verify.hpp"
