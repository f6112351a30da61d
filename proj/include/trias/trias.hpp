#pragma once

// Umbrella header for the whole workbench.

#include "trias/audit.hpp"
#include "trias/catalog.hpp"
#include "trias/centroids.hpp"
#include "trias/derivations.hpp"
#include "trias/endo.hpp"
#include "trias/errors.hpp"
#include "trias/fingerprint.hpp"
#include "trias/formats.hpp"
#include "trias/matrix.hpp"
#include "trias/rational.hpp"
#include "trias/rota_baxter.hpp"
#include "trias/subspace.hpp"
#include "trias/tensor.hpp"
#include "trias/trialgebra.hpp"
