#pragma once

// Umbrella header for the quasigroup toolkit.

#include "qg/cayley_table.hpp"
#include "qg/error.hpp"
#include "qg/fixtures.hpp"
#include "qg/identity.hpp"
#include "qg/modular.hpp"
#include "qg/search.hpp"
#include "qg/spectrum.hpp"
