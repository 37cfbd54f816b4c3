#pragma once

#include "qmpolar/scalar.hpp"
#include "qmpolar/lp.hpp"
#include "qmpolar/cones.hpp"
#include "qmpolar/operator.hpp"
#include "qmpolar/certify.hpp"
#include "qmpolar/mvip.hpp"
#include "qmpolar/io.hpp"
#include "qmpolar/scenarios.hpp"
#include "qmpolar/plot.hpp"
