#pragma once

#include "core.hpp"
#include "cyclotomic.hpp"
#include "transforms.hpp"
#include "graph.hpp"
#include "combinatorics.hpp"
#include "orbits.hpp"
#include "search.hpp"
#include "classify.hpp"
#include "report.hpp"
#include "golden.hpp"
