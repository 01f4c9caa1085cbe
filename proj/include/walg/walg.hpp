#pragma once

// Umbrella header for the whole library.

#include "walg/element.hpp"
#include "walg/errors.hpp"
#include "walg/inversion.hpp"
#include "walg/norms.hpp"
#include "walg/representation.hpp"
#include "walg/scalar.hpp"
#include "walg/structure.hpp"
#include "walg/tet12.hpp"
#include "walg/text.hpp"
