#pragma once

/**
 * @file gca.hpp
 * @brief Umbrella header for the core library (JSON I/O lives in gca/io/).
 */

#include "gca/cluster_formula.hpp"
#include "gca/correspondence.hpp"
#include "gca/errors.hpp"
#include "gca/exchange_graph.hpp"
#include "gca/invariants.hpp"
#include "gca/laurent.hpp"
#include "gca/matrix.hpp"
#include "gca/pattern.hpp"
#include "gca/report.hpp"
#include "gca/seed.hpp"
#include "gca/semifield.hpp"
#include "gca/verify.hpp"
