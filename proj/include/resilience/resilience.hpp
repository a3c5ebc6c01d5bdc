#pragma once

#include "resilience/core/acr_window.hpp"
#include "resilience/core/config.hpp"
#include "resilience/core/iteration.hpp"
#include "resilience/core/monitor.hpp"
#include "resilience/core/phase.hpp"
#include "resilience/core/report.hpp"
#include "resilience/core/state_machine.hpp"
#include "resilience/io/config_file.hpp"
#include "resilience/io/report_json.hpp"
#include "resilience/io/svg_plot.hpp"
#include "resilience/io/timeline_csv.hpp"
#include "resilience/io/trace.hpp"
#include "resilience/sim/classifier.hpp"
#include "resilience/sim/scenario.hpp"
