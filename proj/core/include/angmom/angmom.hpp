#pragma once

#include "angmom/classical_rotor.hpp"
#include "angmom/core_types.hpp"
#include "angmom/harmonics.hpp"
#include "angmom/quadrature.hpp"
#include "angmom/sampling.hpp"
#include "angmom/semiclassics.hpp"
#include "angmom/vector_addition.hpp"
#include "angmom/wigner.hpp"
