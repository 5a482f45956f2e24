#pragma once

// Umbrella header: delta-method / influence-function inference toolkit.

#include "deltainfer/autodiff.hpp"
#include "deltainfer/bootstrap.hpp"
#include "deltainfer/clt.hpp"
#include "deltainfer/csv.hpp"
#include "deltainfer/dual.hpp"
#include "deltainfer/empirical.hpp"
#include "deltainfer/errors.hpp"
#include "deltainfer/estimands.hpp"
#include "deltainfer/kde.hpp"
#include "deltainfer/logit.hpp"
#include "deltainfer/matrix.hpp"
#include "deltainfer/normal.hpp"
#include "deltainfer/report.hpp"
#include "deltainfer/rng.hpp"
#include "deltainfer/sample.hpp"
