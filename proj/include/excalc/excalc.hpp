#pragma once

// Umbrella header.

#include "excalc/calculus.hpp"
#include "excalc/covariant_hodge.hpp"
#include "excalc/errors.hpp"
#include "excalc/extensor.hpp"
#include "excalc/field.hpp"
#include "excalc/gauge.hpp"
#include "excalc/hodge.hpp"
#include "excalc/levi_civita.hpp"
#include "excalc/linalg.hpp"
#include "excalc/metric.hpp"
#include "excalc/multivector.hpp"
#include "excalc/scalar.hpp"
