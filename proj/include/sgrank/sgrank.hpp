#pragma once

#include "sgrank/classify.hpp"
#include "sgrank/exact_rank.hpp"
#include "sgrank/families.hpp"
#include "sgrank/graph6.hpp"
#include "sgrank/invariants.hpp"
#include "sgrank/report.hpp"
#include "sgrank/sgr_io.hpp"
#include "sgrank/signed_graph.hpp"
#include "sgrank/small_graphs.hpp"
#include "sgrank/sweep.hpp"
