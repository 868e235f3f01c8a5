#pragma once

#include "susyho/algebra.hpp"
#include "susyho/coherent.hpp"
#include "susyho/csv.hpp"
#include "susyho/darboux.hpp"
#include "susyho/errors.hpp"
#include "susyho/grid.hpp"
#include "susyho/quadrature.hpp"
#include "susyho/specfun.hpp"
#include "susyho/version.hpp"
