#pragma once

#include "metric_lines/bounds.hpp"
#include "metric_lines/enumerate.hpp"
#include "metric_lines/error.hpp"
#include "metric_lines/extremal.hpp"
#include "metric_lines/graph.hpp"
#include "metric_lines/io.hpp"
#include "metric_lines/line.hpp"
#include "metric_lines/metric_space.hpp"
#include "metric_lines/rational.hpp"
#include "metric_lines/report.hpp"
#include "metric_lines/search.hpp"
#include "metric_lines/simplex.hpp"
#include "metric_lines/triple_system.hpp"
