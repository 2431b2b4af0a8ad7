#pragma once

// Umbrella header: the whole library in dependency order.

#include "report.hpp"      // violations, reports, typed errors
#include "fincat.hpp"      // categories, functors, transformations
#include "monad.hpp"       // monads and their two kinds of morphisms
#include "resolutions.hpp" // the two canonical adjoint resolutions
#include "monoidal.hpp"    // tensor structure and its coherence laws
#include "monmonad.hpp"    // monoidal monads, both formulations
#include "lift.hpp"        // carrying tensors up to the resolutions
#include "builders.hpp"    // stock example families
#include "serialize.hpp"   // the canonical file format
#include "cli.hpp"         // command layer
