#pragma once

#include "pcdual/dualize.hpp"
#include "pcdual/elimination.hpp"
#include "pcdual/error.hpp"
#include "pcdual/plot.hpp"
#include "pcdual/polynomial.hpp"
#include "pcdual/polyparse.hpp"
#include "pcdual/rational.hpp"
#include "pcdual/var.hpp"
