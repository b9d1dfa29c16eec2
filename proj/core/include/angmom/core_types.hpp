#pragma once

#include "angmom/coupled_pair.hpp"
#include "angmom/density.hpp"
#include "angmom/errors.hpp"
#include "angmom/exact_rational.hpp"
#include "angmom/half_int.hpp"
