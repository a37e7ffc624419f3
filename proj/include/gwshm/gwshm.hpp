#pragma once

// Umbrella header for the guided-wave SHM damage-classification library.

#include "gwshm/config.hpp"
#include "gwshm/dataset.hpp"
#include "gwshm/errors.hpp"
#include "gwshm/excitation.hpp"
#include "gwshm/features.hpp"
#include "gwshm/fft.hpp"
#include "gwshm/hash.hpp"
#include "gwshm/interpret.hpp"
#include "gwshm/io.hpp"
#include "gwshm/models/model.hpp"
#include "gwshm/noise.hpp"
#include "gwshm/pipeline.hpp"
#include "gwshm/rng.hpp"
#include "gwshm/scenario.hpp"
#include "gwshm/selection.hpp"
#include "gwshm/svg.hpp"
#include "gwshm/types.hpp"
#include "gwshm/wavelet.hpp"
