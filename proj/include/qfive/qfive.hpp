#pragma once

#include "arith.hpp"
#include "cyclo5.hpp"
#include "identities.hpp"
#include "numeric.hpp"
#include "phase.hpp"
#include "rational.hpp"
#include "render.hpp"
#include "report.hpp"
#include "series.hpp"
#include "theta.hpp"
