#pragma once

#include "bqha/basis.hpp"
#include "bqha/convolution.hpp"
#include "bqha/extended.hpp"
#include "bqha/geometry.hpp"
#include "bqha/operators.hpp"
#include "bqha/quadrature.hpp"
#include "bqha/radialcalc.hpp"
#include "bqha/serialize.hpp"
#include "bqha/space.hpp"
#include "bqha/special.hpp"
#include "bqha/symbol.hpp"
#include "bqha/translation.hpp"
#include "bqha/types.hpp"
