#pragma once

#include "honkit/analytics.hpp"
#include "honkit/compare.hpp"
#include "honkit/corpus.hpp"
#include "honkit/errors.hpp"
#include "honkit/graph.hpp"
#include "honkit/hon.hpp"
#include "honkit/prediction.hpp"
#include "honkit/ranking.hpp"
#include "honkit/selection.hpp"
#include "honkit/special_functions.hpp"
#include "honkit/synth.hpp"
