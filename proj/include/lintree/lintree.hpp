#pragma once

// Umbrella header.

#include "lintree/asymptotics.hpp"
#include "lintree/counts.hpp"
#include "lintree/oracle.hpp"
#include "lintree/report.hpp"
#include "lintree/series.hpp"
#include "lintree/tree.hpp"
