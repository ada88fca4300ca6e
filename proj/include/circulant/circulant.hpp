#pragma once

// Umbrella header.

#include "circulant/arith.hpp"
#include "circulant/bigint.hpp"
#include "circulant/constructive.hpp"
#include "circulant/counting.hpp"
#include "circulant/form.hpp"
#include "circulant/harness.hpp"
