#pragma once

#include "nielsen/errors.hpp"
#include "nielsen/rational.hpp"
#include "nielsen/poly.hpp"
#include "nielsen/matrix.hpp"
#include "nielsen/series.hpp"
#include "nielsen/ratfun.hpp"
#include "nielsen/smith.hpp"
#include "nielsen/group.hpp"
#include "nielsen/character.hpp"
#include "nielsen/maps.hpp"
#include "nielsen/spectral.hpp"
#include "nielsen/validation.hpp"
#include "nielsen/fixed_point.hpp"
#include "nielsen/crystal.hpp"
#include "nielsen/zeta.hpp"
#include "nielsen/fixtures.hpp"
#include "nielsen/io.hpp"
