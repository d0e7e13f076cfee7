#pragma once

#include "younggraph/dimension.hpp"
#include "younggraph/errors.hpp"
#include "younggraph/hall_littlewood.hpp"
#include "younggraph/maxflow.hpp"
#include "younggraph/measure.hpp"
#include "younggraph/parallel.hpp"
#include "younggraph/partition.hpp"
#include "younggraph/poly.hpp"
#include "younggraph/rational.hpp"
#include "younggraph/symfunc.hpp"
#include "younggraph/thoma.hpp"
#include "younggraph/unipotent.hpp"
#include "younggraph/verdict.hpp"
