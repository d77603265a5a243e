#pragma once

// Umbrella header for the verification harness.

#include "excalc/harness/catalog.hpp"
#include "excalc/harness/identity.hpp"
#include "excalc/harness/random.hpp"
#include "excalc/harness/registry.hpp"
#include "excalc/harness/report.hpp"
#include "excalc/harness/runner.hpp"
